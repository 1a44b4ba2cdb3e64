#include "bandprime/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "bandprime/error.hpp"

namespace bandprime {

LaurentPolynomial::LaurentPolynomial(std::map<int, Int> terms) {
    for (const auto& [e, c] : terms)
        if (c != 0) terms_.emplace(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(Int c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(Int c, int exponent) {
    LaurentPolynomial p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
}

Int LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
    if (zero()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
    if (zero()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPolynomial::span() const { return zero() ? 0 : max_exponent() - min_exponent(); }

Int LaurentPolynomial::leading_coefficient() const { return zero() ? 0 : terms_.rbegin()->second; }

BigInt LaurentPolynomial::evaluate(Int t) const {
    if (zero()) return 0;
    if (t == 0 && min_exponent() < 0) throw std::domain_error("negative power of zero");
    // Horner on the shifted polynomial, then divide by t^{-min} exactly when needed.
    BigInt acc = 0;
    BigInt scale = 1;
    const int lo = min_exponent();
    for (int e = max_exponent(); e >= lo; --e) acc = acc * t + coefficient(e);
    if (lo >= 0) {
        for (int i = 0; i < lo; ++i) acc *= t;
        return acc;
    }
    for (int i = 0; i < -lo; ++i) scale *= t;
    if (acc % scale != 0) throw std::domain_error("non-integral Laurent evaluation");
    return acc / scale;
}

bool LaurentPolynomial::symmetric() const {
    for (const auto& [e, c] : terms_)
        if (coefficient(-e) != c) return false;
    return true;
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + by, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& rhs) const {
    std::map<int, Int> t = terms_;
    for (const auto& [e, c] : rhs.terms_) t[e] += c;
    return LaurentPolynomial(std::move(t));
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& rhs) const { return *this + (-rhs); }

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& rhs) const {
    std::map<int, Int> t;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            Int prod = 0;
            if (__builtin_mul_overflow(c1, c2, &prod) || __builtin_add_overflow(t[e1 + e2], prod, &t[e1 + e2]))
                throw ResourceError("integer overflow in polynomial product");
        }
    return LaurentPolynomial(std::move(t));
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& rhs) const {
    if (rhs.zero()) throw std::domain_error("division by zero polynomial");
    if (zero()) return LaurentPolynomial{};
    // Long division from the top; every quotient coefficient must be integral.
    std::map<int, Int> rem = terms_;
    std::map<int, Int> quot;
    const int dtop = rhs.max_exponent();
    const int dbot = rhs.min_exponent();
    const Int dlead = rhs.leading_coefficient();
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        const int e = top->first;
        const Int c = top->second;
        if (e - dtop < min_exponent() - dbot) return std::nullopt;
        if (c % dlead != 0) return std::nullopt;
        const Int q = c / dlead;
        quot[e - dtop] = q;
        for (const auto& [de, dc] : rhs.terms_) {
            auto& slot = rem[de + e - dtop];
            slot -= q * dc;
            if (slot == 0) rem.erase(de + e - dtop);
        }
    }
    return LaurentPolynomial(std::move(quot));
}

LaurentPolynomial LaurentPolynomial::alexander_normalized() const {
    if (zero()) throw PreconditionError("Alexander polynomial vanishes (not a knot?)");
    if (span() % 2 != 0) throw PreconditionError("Alexander polynomial has odd span");
    LaurentPolynomial p = shifted(-(min_exponent() + max_exponent()) / 2);
    if (p.evaluate(1) < 0) p = -p;
    return p;
}

std::string LaurentPolynomial::to_string() const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [e, c] = *it;
        Int mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << 't';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::string LaurentPolynomial::to_compact() const {
    if (zero()) return "";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << ';';
        first = false;
        os << it->first << ':' << it->second;
    }
    return os.str();
}

LaurentPolynomial LaurentPolynomial::from_compact(const std::string& text) {
    std::map<int, Int> t;
    std::istringstream in(text);
    std::string term;
    while (std::getline(in, term, ';')) {
        const auto colon = term.find(':');
        if (colon == std::string::npos) throw ParseError("bad polynomial term '" + term + "'");
        try {
            t[std::stoi(term.substr(0, colon))] += std::stoll(term.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw ParseError("bad polynomial term '" + term + "'");
        }
    }
    return LaurentPolynomial(std::move(t));
}

LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> a) {
    const std::size_t n = a.size();
    if (n == 0) return LaurentPolynomial::constant(1);
    LaurentPolynomial prev = LaurentPolynomial::constant(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].zero()) ++r;
            if (r == n) return {};
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = num.divide_exact(prev);
                if (!q) throw InconsistencyError("Bareiss step is not exact");
                a[i][j] = std::move(*q);
            }
        }
        prev = a[k][k];
    }
    return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace bandprime
