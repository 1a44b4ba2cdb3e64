#pragma once

#include <map>
#include <optional>
#include <string>

#include "bandprime/matrix.hpp"

namespace bandprime {

/// Integer Laurent polynomial in one variable t, stored sparsely (exponent -> nonzero coefficient).
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::map<int, Int> terms);
    static LaurentPolynomial constant(Int c);
    static LaurentPolynomial monomial(Int c, int exponent);

    const std::map<int, Int>& terms() const noexcept { return terms_; }
    bool zero() const noexcept { return terms_.empty(); }
    Int coefficient(int exponent) const;

    /// Requires a nonzero polynomial.
    int min_exponent() const;
    int max_exponent() const;
    int span() const;
    Int leading_coefficient() const;

    BigInt evaluate(Int t) const;
    bool symmetric() const;

    LaurentPolynomial shifted(int by) const;
    LaurentPolynomial operator+(const LaurentPolynomial& rhs) const;
    LaurentPolynomial operator-(const LaurentPolynomial& rhs) const;
    LaurentPolynomial operator*(const LaurentPolynomial& rhs) const;
    LaurentPolynomial operator-() const;

    /// Quotient when rhs divides *this exactly in Z[t, 1/t]; nullopt otherwise.
    std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& rhs) const;
    bool divisible_by(const LaurentPolynomial& rhs) const { return divide_exact(rhs).has_value(); }

    /// Symmetric representative (exponents balanced around 0) with positive value at t = 1.
    /// Throws PreconditionError for zero input or odd span.
    LaurentPolynomial alexander_normalized() const;

    /// "t - 1 + t^-1" style.
    std::string to_string() const;
    /// "1:1;0:-1;-1:1" style (descending exponents), the corpus column format.
    std::string to_compact() const;
    static LaurentPolynomial from_compact(const std::string& text);

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::map<int, Int> terms_;
};

/// Determinant of a square matrix of Laurent polynomials, by Bareiss elimination with exact division.
LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m);

}  // namespace bandprime
