#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bandprime {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Int> column(std::size_t c) const;
    std::vector<std::vector<Int>> to_rows() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    bool symmetric() const;
    Int max_abs() const;

    /// Congruence transform Uᵀ·this·U.
    IntMatrix congruent(const IntMatrix& u) const;

    /// Sub-matrix made of the listed rows and columns.
    IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. The 0×0 determinant is 1.
BigInt determinant(const IntMatrix& m);

/// xᵀ·Q·y for integer vectors.
Int bilinear(const IntMatrix& q, std::span<const Int> x, std::span<const Int> y);

/// Exact inverse of a unimodular matrix; throws if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Checked narrowing from a big integer.
Int to_int(const BigInt& v);

}  // namespace bandprime
