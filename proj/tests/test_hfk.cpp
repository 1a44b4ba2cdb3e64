#include <doctest.h>

#include "bandprime/corpus.hpp"
#include "bandprime/error.hpp"
#include "bandprime/hfk.hpp"
#include "bandprime/invariants.hpp"

using namespace bandprime;

namespace {

Int rank_at(const HfkTable& h, int a, Rational m) {
    auto it = h.ranks.find({a, m});
    return it == h.ranks.end() ? 0 : it->second;
}

HfkTable trefoil() { return thin_hfk(LaurentPolynomial::from_compact("1:1;0:-1;-1:1"), -2); }
HfkTable figure_eight() { return thin_hfk(LaurentPolynomial::from_compact("1:-1;0:3;-1:-1"), 0); }

}  // namespace

TEST_CASE("thin tables") {
    const HfkTable t = trefoil();
    CHECK(t.ranks.size() == 3);
    CHECK(rank_at(t, 1, 0) == 1);
    CHECK(rank_at(t, 0, -1) == 1);
    CHECK(rank_at(t, -1, -2) == 1);
    CHECK(total_rank(t) == 3);
    CHECK(t.delta_grading == -1);

    const HfkTable u = thin_hfk(LaurentPolynomial::constant(1), 0);
    CHECK(u.ranks.size() == 1);
    CHECK(rank_at(u, 0, 0) == 1);

    const HfkTable f = figure_eight();
    CHECK(rank_at(f, 1, 1) == 1);
    CHECK(rank_at(f, 0, 0) == 3);
    CHECK(rank_at(f, -1, -1) == 1);
    CHECK(total_rank(f) == 5);

    CHECK_THROWS_AS(thin_hfk(LaurentPolynomial::constant(1), 1), PreconditionError);
    CHECK_THROWS_AS(thin_hfk(LaurentPolynomial::from_compact("2:1;1:-1;0:1"), 0), PreconditionError);
}

TEST_CASE("isomorphism") {
    CHECK(hfk_isomorphic(trefoil(), trefoil()));
    CHECK_FALSE(hfk_isomorphic(trefoil(), thin_hfk(LaurentPolynomial::constant(1), 0)));
    CHECK_FALSE(hfk_isomorphic(trefoil(), figure_eight()));
    // Same ranks in a different δ-grading are not isomorphic.
    CHECK_FALSE(hfk_isomorphic(trefoil(), thin_hfk(LaurentPolynomial::from_compact("1:1;0:-1;-1:1"), 2)));
    HfkTable padded = trefoil();
    padded.ranks[{5, 5}] = 0;
    CHECK(hfk_isomorphic(trefoil(), padded));
}

TEST_CASE("corpus alternating knots: Euler characteristic and total rank") {
    for (const auto& e : load_corpus(std::string(BANDPRIME_DATA_DIR) + "/alternating_le9.csv")) {
        CAPTURE(e.name);
        const auto od = orient(parse_pd(e.pd));
        const auto b = bundle(od);
        const HfkTable h = thin_hfk(b.alexander, b.signature);
        CHECK(is_thin(h));
        CHECK(total_rank(h) == b.determinant);
        CHECK(euler_characteristic(h) == b.alexander);
        if (e.det) CHECK(total_rank(h) == *e.det);
        CHECK(thin_hfk(b.alexander.shifted(3).alexander_normalized(), b.signature) == h);
    }
}
