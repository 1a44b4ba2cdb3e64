#include "bandprime/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "bandprime/error.hpp"

namespace bandprime {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
    std::vector<Int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
    std::vector<std::vector<Int>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                Int prod = 0;
                if (__builtin_mul_overflow(a, rhs(k, j), &prod) ||
                    __builtin_add_overflow(out(i, j), prod, &out(i, j)))
                    throw ResourceError("integer overflow in matrix product");
            }
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix out = *this;
    for (auto& v : out.data_) v = -v;
    return out;
}

bool IntMatrix::symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Int IntMatrix::max_abs() const {
    Int m = 0;
    for (Int v : data_) m = std::max(m, v < 0 ? -v : v);
    return m;
}

IntMatrix IntMatrix::congruent(const IntMatrix& u) const { return u.transpose() * (*this) * u; }

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << m(r, c);
        }
        os << ']';
    }
    return os << ']';
}

BigInt determinant(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Int bilinear(const IntMatrix& q, std::span<const Int> x, std::span<const Int> y) {
    Int total = 0;
    for (std::size_t i = 0; i < q.rows(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < q.cols(); ++j) row += q(i, j) * y[j];
        total += x[i] * row;
    }
    return total;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    if (!u.square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = u.rows();
    // Gauss-Jordan over the rationals; a unimodular input yields an integral inverse.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = u(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("matrix is singular");
        std::swap(a[piv], a[col]);
        const Rational p = a[col][col];
        for (auto& v : a[col]) v /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = a[i][n + j];
            if (denominator(v) != 1) throw std::invalid_argument("matrix is not unimodular");
            inv(i, j) = to_int(numerator(v));
        }
    return inv;
}

Int to_int(const BigInt& v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw ResourceError("integer value exceeds 64 bits: " + v.str());
    return static_cast<Int>(v);
}

}  // namespace bandprime
