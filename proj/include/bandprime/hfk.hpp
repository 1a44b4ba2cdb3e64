#pragma once

#include <map>
#include <utility>

#include "bandprime/matrix.hpp"
#include "bandprime/polynomial.hpp"

namespace bandprime {

/// Bigraded ranks over F2, keyed by (alexander, maslov).
struct HfkTable {
    std::map<std::pair<int, Rational>, Int> ranks;
    Rational delta_grading = 0;

    friend bool operator==(const HfkTable&, const HfkTable&) = default;
};

/// HFK of a thin knot: rank |a_s| at (s, s + sigma/2). Requires a normalized Δ and even sigma.
HfkTable thin_hfk(const LaurentPolynomial& delta, int sigma);

bool hfk_isomorphic(const HfkTable& a, const HfkTable& b);

/// Σ (-1)^maslov · rank · t^alexander. Throws PreconditionError on a non-integral Maslov grading.
LaurentPolynomial euler_characteristic(const HfkTable& h);

Int total_rank(const HfkTable& h);

/// True when every nonzero entry has maslov - alexander = delta_grading.
bool is_thin(const HfkTable& h);

}  // namespace bandprime
