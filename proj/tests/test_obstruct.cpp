#include <doctest.h>

#include <algorithm>
#include <random>

#include "bandprime/corpus.hpp"
#include "bandprime/error.hpp"
#include "bandprime/obstruct.hpp"
#include "oracles.hpp"

using namespace bandprime;

namespace {

const char* kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const char* kGranny = "X(2,5,3,6) X(6,3,7,4) X(4,7,5,8) X(8,11,9,12) X(12,9,1,10) X(10,1,11,2)";

OrientedDiagram od(const std::string& pd) { return orient(parse_pd(pd)); }

const GramForm kA2(IntMatrix{{2, 1}, {1, 2}});

std::vector<CorpusEntry> corpus(const char* file) {
    return load_corpus(std::string(BANDPRIME_DATA_DIR) + "/" + file);
}

}  // namespace

TEST_CASE("trefoil certificate") {
    const auto r = band_prime_certificate(od(kTrefoil));
    CHECK(r.verdict == CertificateVerdict::band_prime_certified);
    REQUIRE(r.factors.size() == 1);
    const auto& f = r.factors[0];
    CHECK(isometric(GramForm(f.flow.gram), kA2));
    CHECK(f.decomposition.summands.size() == 1);
    CHECK(f.signature == -2);
    const IntMatrix sym = f.seifert + f.seifert.transpose();
    CHECK(verify_isometry(f.seifert_sign > 0 ? sym : -sym, f.flow.gram,
                          f.isometry_witness));
    CHECK(r.input_hash == diagram_hash(parse_pd(kTrefoil)));
    CHECK(r.input_hash != diagram_hash(parse_pd(kFigureEight)));
}

TEST_CASE("granny and figure eight") {
    const auto g = band_prime_certificate(orient(mirror(parse_pd(kGranny))));
    CHECK(g.verdict == CertificateVerdict::band_prime_certified);
    REQUIRE(g.factors.size() == 2);
    for (const auto& f : g.factors) {
        CHECK(isometric(GramForm(f.flow.gram), kA2));
        CHECK(f.signature == -2);
    }
    CHECK(g.whole_summands == 2);
    CHECK(g.whole_blocks == 2);
    CHECK(band_prime_certificate(od(kGranny)).verdict == CertificateVerdict::band_prime_certified);

    const auto f8 = band_prime_certificate(od(kFigureEight));
    CHECK(f8.verdict == CertificateVerdict::not_applicable);
    CHECK(f8.factors.empty());

    const auto u = band_prime_certificate(od(""));
    CHECK(u.verdict == CertificateVerdict::band_prime_certified);
    CHECK(u.factors.empty());
}

TEST_CASE("rank cap is enforced") {
    LatticeOptions tight;
    tight.rank_cap = 1;
    CHECK_THROWS_AS(band_prime_certificate(od(kTrefoil), tight), ResourceError);
}

TEST_CASE("anisotropy") {
    CHECK(anisotropy_check(bundle(od(kTrefoil))).holds);
    CHECK(anisotropy_check(bundle(od(""))).holds);
    const auto f8 = anisotropy_check(bundle(od(kFigureEight)));
    CHECK_FALSE(f8.holds);
    CHECK(f8.sigma == 0);
    CHECK(f8.span == 2);
}

TEST_CASE("minimality dispatch") {
    const auto t = minimality_evidence(od(kTrefoil), false);
    CHECK(t.verdict == MinimalityVerdict::minimal_certified);
    CHECK(t.conditions.fibered == true);
    CHECK(minimality_evidence(od(kFigureEight), false).verdict == MinimalityVerdict::not_applicable);
    CHECK(minimality_evidence(od(kFigureEight), true).verdict == MinimalityVerdict::not_applicable);
    for (const auto& e : corpus("alternating_le9.csv")) {
        if (e.name == "5_2") {
            const auto m = minimality_evidence(od(e.pd), false);
            CHECK(m.verdict == MinimalityVerdict::minimal_certified);
            CHECK(m.conditions.fibered == false);
            CHECK(m.conditions.prime_power_leading);
        }
        if (e.name == "9_5") {
            // Δ = 6t - 11 + 6/t: neither monic nor a prime-power leading coefficient.
            const auto m = minimality_evidence(od(e.pd), false);
            CHECK(m.verdict == MinimalityVerdict::evidence_only);
            CHECK(m.hfk.has_value());
            CHECK(minimality_evidence(od(e.pd), true).verdict == MinimalityVerdict::minimal_certified);
        }
    }
    for (const auto& e : corpus("nonalternating_le9.csv")) {
        const auto m = minimality_evidence(od(e.pd), true);
        CHECK(m.verdict == MinimalityVerdict::not_applicable);
        CHECK_FALSE(m.conditions.fibered.has_value());
        CHECK_FALSE(m.hfk.has_value());
    }
}

TEST_CASE("pair obstructions") {
    const auto u = profile(od(""));
    const auto t = profile(od(kTrefoil));
    const auto f8 = profile(od(kFigureEight));
    const auto granny = profile(od(kGranny));

    auto kinds = [](const std::vector<Finding>& fs) {
        std::vector<std::string> out;
        for (const auto& f : fs) out.push_back(f.kind);
        return out;
    };
    const auto ut = kinds(concordance_pair_obstructions(u, t, true));
    for (const char* k : {"hfk", "determinant", "genus", "signature"})
        CHECK(std::find(ut.begin(), ut.end(), k) != ut.end());
    CHECK(concordance_pair_obstructions(t, t, true).empty());
    const auto tf = kinds(concordance_pair_obstructions(t, f8, false));
    CHECK(std::find(tf.begin(), tf.end(), "signature") != tf.end());
    // The granny here is the sum of two negative trefoils.
    const auto tg = kinds(concordance_pair_obstructions(profile(orient(mirror(parse_pd(kTrefoil)))), granny, true));
    CHECK(std::find(tg.begin(), tg.end(), "alexander") == tg.end());
    CHECK(std::find(tg.begin(), tg.end(), "hfk") != tg.end());
}

TEST_CASE("corpus certificates") {
    for (const char* file : {"alternating_le9.csv", "nonalternating_le9.csv"}) {
        for (const auto& e : corpus(file)) {
            CAPTURE(e.name);
            const auto o = od(e.pd);
            const auto rep = classify_special(o);
            const auto r = band_prime_certificate(o);
            CHECK(r.verdict == (rep.special_alternating() ? CertificateVerdict::band_prime_certified
                                                          : CertificateVerdict::not_applicable));
            if (rep.special_alternating()) {
                CHECK(anisotropy_check(bundle(o)).holds);
                CHECK(r.whole_summands == r.whole_blocks);
                CHECK(r.factors.size() == connected_sum_factors(o.diagram).size());
                const auto m = band_prime_certificate(orient(mirror(o.diagram)));
                CHECK(m.verdict == CertificateVerdict::band_prime_certified);
                REQUIRE(m.factors.size() == r.factors.size());
                for (std::size_t i = 0; i < r.factors.size(); ++i)
                    CHECK(m.factors[i].signature == -r.factors[i].signature);
            }
            const auto p = profile(o);
            CHECK(concordance_pair_obstructions(p, p, rep.special_alternating()).empty());
        }
    }
}

TEST_CASE("random special alternating composites certify") {
    std::vector<Diagram> pieces;
    for (const auto& d : oracle::corpus_diagrams("alternating_le9.csv"))
        if (classify_special(orient(d)).is_special) pieces.push_back(d);
    std::mt19937 rng(99);
    LatticeOptions wide;
    wide.rank_cap = 24;
    int certified = 0;
    for (int i = 0; i < 80; ++i) {
        const Diagram d = oracle::random_alternating_composite(pieces, rng, 1 + i % 3);
        const auto o = orient(d);
        const auto r = band_prime_certificate(o, wide);
        if (classify_special(o).special_alternating()) {
            CHECK(r.verdict == CertificateVerdict::band_prime_certified);
            ++certified;
        } else {
            CHECK(r.verdict == CertificateVerdict::not_applicable);
        }
    }
    CHECK(certified > 20);
}
