#include "bandprime/hfk.hpp"

#include "bandprime/error.hpp"

namespace bandprime {

HfkTable thin_hfk(const LaurentPolynomial& delta, int sigma) {
    if (sigma % 2 != 0) throw PreconditionError("thin HFK needs an even signature");
    if (delta.alexander_normalized() != delta) throw PreconditionError("thin HFK needs a normalized Alexander polynomial");
    HfkTable h;
    h.delta_grading = Rational(sigma, 2);
    for (const auto& [s, a] : delta.terms())
        if (a != 0) h.ranks[{s, Rational(s) + h.delta_grading}] = a < 0 ? -a : a;
    return h;
}

bool hfk_isomorphic(const HfkTable& a, const HfkTable& b) {
    auto nonzero = [](const HfkTable& h) {
        std::map<std::pair<int, Rational>, Int> out;
        for (const auto& [k, r] : h.ranks)
            if (r != 0) out.emplace(k, r);
        return out;
    };
    return nonzero(a) == nonzero(b);
}

LaurentPolynomial euler_characteristic(const HfkTable& h) {
    LaurentPolynomial chi;
    for (const auto& [key, r] : h.ranks) {
        const Rational& m = key.second;
        if (denominator(m) != 1) throw PreconditionError("non-integral Maslov grading");
        const bool odd = numerator(m) % 2 != 0;
        chi = chi + LaurentPolynomial::monomial(odd ? -r : r, key.first);
    }
    return chi;
}

Int total_rank(const HfkTable& h) {
    Int total = 0;
    for (const auto& kv : h.ranks) total += kv.second;
    return total;
}

bool is_thin(const HfkTable& h) {
    for (const auto& [key, r] : h.ranks)
        if (r != 0 && key.second - key.first != h.delta_grading) return false;
    return true;
}

}  // namespace bandprime
