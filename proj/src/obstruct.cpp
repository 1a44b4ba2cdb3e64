#include "bandprime/obstruct.hpp"

#include <algorithm>

#include "bandprime/error.hpp"
#include "bandprime/tait.hpp"

namespace bandprime {

const char* to_string(CertificateVerdict v) {
    switch (v) {
        case CertificateVerdict::band_prime_certified: return "band_prime_certified";
        case CertificateVerdict::not_applicable: return "not_applicable";
        case CertificateVerdict::inconsistency: return "inconsistency";
    }
    return "?";
}

const char* to_string(MinimalityVerdict v) {
    switch (v) {
        case MinimalityVerdict::minimal_certified: return "minimal_certified";
        case MinimalityVerdict::evidence_only: return "evidence_only";
        case MinimalityVerdict::not_applicable: return "not_applicable";
    }
    return "?";
}

std::uint64_t diagram_hash(const Diagram& d) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : d.to_pd()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InconsistencyError(what);
}

FactorRecord certify_factor(const DiagramFactor& f, const LatticeOptions& opt) {
    FactorRecord fr;
    fr.diagram = f.diagram;
    fr.crossings = f.crossings;
    const OrientedDiagram of = orient(f.diagram);
    const SpecialityReport rep = classify_special(of);
    require(rep.special_alternating(), "factor is not special alternating");
    fr.graph = tait_graph(checkerboard(f.diagram), *rep.orientable_color);
    const TaitGraph& g = fr.graph;
    fr.positive_rank_blocks = blocks(g).positive_rank_blocks();

    fr.flow = flow_lattice(g);
    fr.definiteness = definiteness(fr.flow);
    require(fr.definiteness == Definiteness::positive_definite, "factor flow lattice is not definite");
    fr.decomposition = indecomposable_summands(fr.flow, opt);
    require(verify_decomposition(fr.flow, fr.decomposition), "decomposition witness fails to verify");
    const auto summands = static_cast<int>(fr.decomposition.summands.size());
    require(summands == fr.positive_rank_blocks, "lattice summands disagree with graph blocks");
    require(summands == 1, "factor flow lattice decomposes");

    fr.seifert = seifert_matrix_special(of);
    const GramForm sym(fr.seifert + fr.seifert.transpose(), Provenance::seifert_symmetrized);
    const Definiteness sd = definiteness(sym);
    require(sd == Definiteness::positive_definite || sd == Definiteness::negative_definite,
            "symmetrized Seifert form is not definite");
    fr.seifert_sign = sd == Definiteness::positive_definite ? 1 : -1;
    const GramForm pos = fr.seifert_sign > 0 ? sym : -sym;
    const auto u = isometry(pos, GramForm(fr.flow.gram), opt);
    require(u.has_value(), "symmetrized Seifert form is not isometric to the flow lattice");
    require(verify_isometry(pos.gram, fr.flow.gram, *u), "isometry witness fails to verify");
    fr.isometry_witness = *u;

    fr.signature = bundle(of).signature;
    require(fr.signature == fr.seifert_sign * static_cast<int>(fr.flow.rank()),
            "signature differs from the signature of the surface form");
    require(fr.signature != 0, "factor signature vanishes");
    return fr;
}

}  // namespace

CertificateReport band_prime_certificate(const OrientedDiagram& od, const LatticeOptions& opt) {
    if (!od.is_knot()) throw PreconditionError("band-primeness certificate requires a knot diagram");
    const Diagram& d = od.diagram;
    CertificateReport r;
    r.input_hash = diagram_hash(d);
    r.speciality = classify_special(od);
    if (!r.speciality.special_alternating()) {
        r.notes.push_back(r.speciality.is_alternating ? "alternating but not special" : "not alternating");
        return r;
    }
    if (d.crossing_count() == 0) {
        r.verdict = CertificateVerdict::band_prime_certified;
        r.notes.push_back("trivial diagram");
        return r;
    }
    try {
        const TaitGraph g = tait_graph(checkerboard(d), *r.speciality.orientable_color);
        r.whole_blocks = blocks(g).positive_rank_blocks();
        const GramForm flow = flow_lattice(g);
        if (flow.rank() > 0) {
            const Decomposition dec = indecomposable_summands(flow, opt);
            require(verify_decomposition(flow, dec), "decomposition witness fails to verify");
            r.whole_summands = static_cast<int>(dec.summands.size());
        }
        require(r.whole_summands == r.whole_blocks, "lattice summands disagree with graph blocks");
        const int loops = static_cast<int>(
            std::count_if(g.edges.begin(), g.edges.end(), [](const TaitEdge& e) { return e.loop(); }));

        int nugatory = 0;
        for (const DiagramFactor& f : factorize(d)) {
            if (f.diagram.crossing_count() <= 1) {
                ++nugatory;
                continue;
            }
            r.factors.push_back(certify_factor(f, opt));
        }
        if (nugatory > 0) r.notes.push_back(std::to_string(nugatory) + " nugatory crossing(s) split off as trivial factors");
        require(static_cast<int>(r.factors.size()) == r.whole_blocks - loops,
                "factor count disagrees with the block structure");
        r.verdict = CertificateVerdict::band_prime_certified;
    } catch (const InconsistencyError& e) {
        r.verdict = CertificateVerdict::inconsistency;
        r.notes.push_back(e.what());
    }
    return r;
}

Anisotropy anisotropy_check(const InvariantBundle& b) {
    Anisotropy a;
    a.sigma = b.signature;
    a.span = b.alexander.span();
    a.holds = (a.sigma < 0 ? -a.sigma : a.sigma) == a.span;
    return a;
}

KnotProfile profile(const OrientedDiagram& od) {
    KnotProfile p;
    p.invariants = bundle(od);
    const SpecialityReport rep = classify_special(od);
    p.special_alternating = rep.special_alternating();
    if (rep.is_alternating) p.hfk = thin_hfk(p.invariants.alexander, p.invariants.signature);
    return p;
}

MinimalityEvidence minimality_evidence(const OrientedDiagram& od, bool assert_two_bridge) {
    const KnotProfile p = profile(od);
    MinimalityEvidence m;
    m.invariants = p.invariants;
    m.hfk = p.hfk;
    m.anisotropy = anisotropy_check(p.invariants);
    m.conditions.fibered = p.invariants.fibered_alternating;
    m.conditions.prime_power_leading = p.invariants.leading_coeff_prime_power;
    m.conditions.two_bridge_asserted = assert_two_bridge;
    if (!p.special_alternating) {
        m.verdict = MinimalityVerdict::not_applicable;
    } else if (m.conditions.fibered.value_or(false) || m.conditions.prime_power_leading || assert_two_bridge) {
        m.verdict = MinimalityVerdict::minimal_certified;
    } else {
        m.verdict = MinimalityVerdict::evidence_only;
    }
    return m;
}

std::vector<Finding> concordance_pair_obstructions(const KnotProfile& lower, const KnotProfile& upper,
                                                   bool upper_is_special_alternating) {
    std::vector<Finding> out;
    const InvariantBundle& lo = lower.invariants;
    const InvariantBundle& up = upper.invariants;
    // Ribbon concordant knots are concordant, so signatures agree.
    if (lo.signature != up.signature)
        out.push_back({"signature", "signature " + std::to_string(lo.signature) + " != " + std::to_string(up.signature)});
    if (!up.alexander.divisible_by(lo.alexander))
        out.push_back({"alexander", "Alexander polynomial " + lo.alexander.to_string() + " does not divide " +
                                        up.alexander.to_string()});
    // span(Δ)/2 bounds the genus of the lower knot from below; the Seifert genus bounds the upper one from above.
    const int lower_bound = lo.alexander.span() / 2;
    if (upper_is_special_alternating) {
        // The upper genus is exact, and equal Floer homology forces equal Alexander polynomials.
        if (lower_bound != up.genus)
            out.push_back({"genus", "genus " + std::to_string(lower_bound) + " != " + std::to_string(up.genus)});
        if (lo.determinant != up.determinant)
            out.push_back({"determinant",
                           "det " + std::to_string(lo.determinant) + " != " + std::to_string(up.determinant)});
        if (lower.hfk && upper.hfk) {
            if (!hfk_isomorphic(*lower.hfk, *upper.hfk))
                out.push_back({"hfk", "knot Floer homology differs"});
        } else if (lo.alexander != up.alexander) {
            out.push_back({"hfk", "knot Floer homology differs (Euler characteristic)"});
        }
    } else if (lower_bound > up.genus) {
        out.push_back({"genus", "genus " + std::to_string(lower_bound) + " > " + std::to_string(up.genus)});
    }
    return out;
}

}  // namespace bandprime
