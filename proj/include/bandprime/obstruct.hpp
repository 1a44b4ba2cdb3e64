#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bandprime/diagram.hpp"
#include "bandprime/hfk.hpp"
#include "bandprime/invariants.hpp"
#include "bandprime/lattice.hpp"
#include "bandprime/tait.hpp"

namespace bandprime {

enum class CertificateVerdict { band_prime_certified, not_applicable, inconsistency };
const char* to_string(CertificateVerdict v);

struct FactorRecord {
    Diagram diagram;
    std::vector<int> crossings;  // indices into the input diagram
    TaitGraph graph;  // orientable-color Tait graph of the factor
    int positive_rank_blocks = 0;
    GramForm flow;
    Definiteness definiteness = Definiteness::degenerate;
    Decomposition decomposition;
    IntMatrix seifert;
    IntMatrix isometry_witness;  // Uᵀ·(±(V + Vᵀ))·U = flow Gram
    int seifert_sign = 1;        // the ± above
    int signature = 0;
};

struct CertificateReport {
    std::uint64_t input_hash = 0;
    SpecialityReport speciality;
    int whole_summands = 0;  // indecomposable summands of the full flow lattice
    int whole_blocks = 0;    // positive-rank blocks of the full Tait graph
    std::vector<FactorRecord> factors;
    CertificateVerdict verdict = CertificateVerdict::not_applicable;
    std::vector<std::string> notes;
};

/// FNV-1a over the canonical PD text.
std::uint64_t diagram_hash(const Diagram& d);

/// Re-derives the band-primeness certificate. ResourceError propagates when a lattice
/// exceeds the options; any internal disagreement yields the inconsistency verdict.
CertificateReport band_prime_certificate(const OrientedDiagram& od, const LatticeOptions& opt = {});

struct Anisotropy {
    bool holds = false;
    int sigma = 0;
    int span = 0;
};

/// |σ| = span(Δ).
Anisotropy anisotropy_check(const InvariantBundle& b);

enum class MinimalityVerdict { minimal_certified, evidence_only, not_applicable };
const char* to_string(MinimalityVerdict v);

struct MinimalityConditions {
    std::optional<bool> fibered;
    bool prime_power_leading = false;
    bool two_bridge_asserted = false;
};

struct MinimalityEvidence {
    Anisotropy anisotropy;
    MinimalityConditions conditions;
    MinimalityVerdict verdict = MinimalityVerdict::not_applicable;
    InvariantBundle invariants;
    std::optional<HfkTable> hfk;  // thin formula, alternating inputs only
};

MinimalityEvidence minimality_evidence(const OrientedDiagram& od, bool assert_two_bridge);

struct KnotProfile {
    InvariantBundle invariants;
    std::optional<HfkTable> hfk;
    bool special_alternating = false;
};

KnotProfile profile(const OrientedDiagram& od);

struct Finding {
    std::string kind;  // signature, alexander, genus, determinant, hfk
    std::string message;
};

/// Violated necessary conditions for a ribbon concordance lower <= upper.
/// An empty list means no obstruction was found.
std::vector<Finding> concordance_pair_obstructions(const KnotProfile& lower, const KnotProfile& upper,
                                                   bool upper_is_special_alternating);

}  // namespace bandprime
