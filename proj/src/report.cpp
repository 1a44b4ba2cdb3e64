#include "bandprime/report.hpp"

#include <cstdio>

namespace bandprime {

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Rational& r) {
    if (denominator(r) == 1) return static_cast<long long>(numerator(r));
    return numerator(r).str() + "/" + denominator(r).str();
}

Json to_json(const LaurentPolynomial& p) {
    Json terms = Json::object();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) terms[std::to_string(it->first)] = it->second;
    return {{"terms", std::move(terms)}, {"string", p.to_string()}};
}

Json to_json(const TaitGraph& g) {
    Json edges = Json::array();
    for (const TaitEdge& e : g.edges)
        edges.push_back({{"tail", e.tail}, {"head", e.head}, {"sign", e.sign}, {"crossing", e.crossing}});
    return {{"color", to_string(g.color)},
            {"vertices", g.vertex_count},
            {"faces", g.faces},
            {"edges", std::move(edges)},
            {"cycle_rank", g.cycle_rank()}};
}

Json to_json(const GramForm& q) {
    return {{"gram", to_json(q.gram)}, {"provenance", to_string(q.provenance)}, {"negated", q.negated}};
}

Json to_json(const SpecialityReport& r) {
    Json j{{"is_alternating", r.is_alternating},
           {"is_special", r.is_special},
           {"special_alternating", r.special_alternating()},
           {"orientable_color", nullptr},
           {"uniform_sign", nullptr},
           {"mirror_applied", r.mirror_applied}};
    if (r.orientable_color) j["orientable_color"] = to_string(*r.orientable_color);
    if (r.uniform_sign) j["uniform_sign"] = *r.uniform_sign;
    return j;
}

Json to_json(const InvariantBundle& b) {
    Json j{{"signature", b.signature},
           {"alexander", to_json(b.alexander)},
           {"determinant", b.determinant},
           {"genus", b.genus},
           {"fibered_alternating", nullptr},
           {"leading_coeff", b.leading_coeff},
           {"leading_coeff_prime_power", b.leading_coeff_prime_power}};
    if (b.fibered_alternating) j["fibered_alternating"] = *b.fibered_alternating;
    return j;
}

Json to_json(const HfkTable& h) {
    Json entries = Json::array();
    for (auto it = h.ranks.rbegin(); it != h.ranks.rend(); ++it)
        entries.push_back({{"alexander", it->first.first}, {"maslov", to_json(it->first.second)}, {"rank", it->second}});
    return {{"entries", std::move(entries)}, {"delta_grading", to_json(h.delta_grading)}, {"total_rank", total_rank(h)}};
}

std::string hex_hash(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json to_json(const CertificateReport& r) {
    Json factors = Json::array();
    for (const FactorRecord& f : r.factors) {
        Json summands = Json::array();
        for (const GramForm& s : f.decomposition.summands) summands.push_back(to_json(s.gram));
        factors.push_back({{"pd", f.diagram.to_pd()},
                           {"crossings", f.crossings},
                           {"tait_graph", to_json(f.graph)},
                           {"positive_rank_blocks", f.positive_rank_blocks},
                           {"flow_lattice", to_json(f.flow)},
                           {"definiteness", to_string(f.definiteness)},
                           {"indecomposability",
                            {{"summands", std::move(summands)}, {"witness", to_json(f.decomposition.witness)}}},
                           {"seifert_matrix", to_json(f.seifert)},
                           {"isometry", {{"sign", f.seifert_sign}, {"witness", to_json(f.isometry_witness)}}},
                           {"signature", f.signature}});
    }
    return {{"input_hash", hex_hash(r.input_hash)},
            {"speciality", to_json(r.speciality)},
            {"whole_lattice", {{"summands", r.whole_summands}, {"positive_rank_blocks", r.whole_blocks}}},
            {"factors", std::move(factors)},
            {"verdict", to_string(r.verdict)},
            {"notes", r.notes}};
}

Json to_json(const MinimalityEvidence& m) {
    Json fibered = nullptr;
    if (m.conditions.fibered) fibered = *m.conditions.fibered;
    return {{"anisotropy", {{"holds", m.anisotropy.holds}, {"sigma", m.anisotropy.sigma}, {"span", m.anisotropy.span}}},
            {"conditions",
             {{"fibered", fibered},
              {"prime_power_leading", m.conditions.prime_power_leading},
              {"two_bridge_asserted", m.conditions.two_bridge_asserted}}},
            {"verdict", to_string(m.verdict)},
            {"invariant_bundle", to_json(m.invariants)},
            {"hfk", m.hfk ? to_json(*m.hfk) : Json(nullptr)}};
}

Json to_json(const Finding& f) { return {{"kind", f.kind}, {"message", f.message}}; }

}  // namespace bandprime
