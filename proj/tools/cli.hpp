#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bandprime/lattice.hpp"
#include "bandprime/report.hpp"

namespace bandprime::cli {

enum Exit : int { ok = 0, inconsistency = 1, input_error = 2, resource_cap = 3 };

struct AnalyzeOptions {
    LatticeOptions lattice;
    bool assert_two_bridge = false;
};

struct AnalyzeResult {
    Json report;  // null when the input could not be analyzed
    int status = ok;
    std::string error;
};

/// Full analysis of one PD text; never throws.
AnalyzeResult analyze(const std::string& pd, const AnalyzeOptions& opt);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bandprime::cli
