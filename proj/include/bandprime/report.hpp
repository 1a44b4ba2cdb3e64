#pragma once

#include <string>

#include <json.hpp>

#include "bandprime/diagram.hpp"
#include "bandprime/hfk.hpp"
#include "bandprime/invariants.hpp"
#include "bandprime/lattice.hpp"
#include "bandprime/obstruct.hpp"
#include "bandprime/tait.hpp"

namespace bandprime {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "bandprime.report/1";

Json to_json(const IntMatrix& m);
Json to_json(const Rational& r);  // integer when integral, "p/q" otherwise
Json to_json(const LaurentPolynomial& p);
Json to_json(const TaitGraph& g);
Json to_json(const GramForm& q);
Json to_json(const SpecialityReport& r);
Json to_json(const InvariantBundle& b);
Json to_json(const HfkTable& h);
Json to_json(const CertificateReport& r);
Json to_json(const MinimalityEvidence& m);
Json to_json(const Finding& f);

/// 16 lowercase hex digits.
std::string hex_hash(std::uint64_t h);

}  // namespace bandprime
