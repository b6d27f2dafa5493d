#pragma once

// Exact integer/rational arithmetic and fraction-free elimination.
//
// Everything here is exact: integers are arbitrary precision and every
// elimination step divides only where the division is known to be exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catnerve {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p/q", or "n" when the value is integral.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

template <typename T>
bool is_zero(const Matrix<T>& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) return false;
    return true;
}

/// Row echelon form computed by Bareiss' fraction-free elimination.
///
/// Pivot columns are taken left to right; the pivot row is the first row at
/// or below the current one with a nonzero entry. Columns without a pivot
/// are skipped and leave the running divisor unchanged, which keeps every
/// division exact (each entry stays a minor of the input).
struct Echelon {
    ZMatrix rows;                          // echelon matrix, same shape as input
    std::vector<std::size_t> pivot_cols;   // pivot column of row r, for r < rank
    std::size_t rank() const { return pivot_cols.size(); }
};

inline Echelon fraction_free_echelon(ZMatrix m, std::size_t pivot_col_limit) {
    Echelon out;
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    Integer divisor = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_col_limit && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m(p, c) == 0) ++p;
        if (p == nrows) continue;
        if (p != r)
            for (std::size_t j = 0; j < ncols; ++j) std::swap(m(p, j), m(r, j));
        const Integer pivot = m(r, c);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const Integer lead = m(i, c);
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Integer num = pivot * m(i, j) - lead * m(r, j);
                Integer q, rem;
                boost::multiprecision::divide_qr(num, divisor, q, rem);
                if (rem != 0) throw std::logic_error("fraction-free elimination: inexact division");
                m(i, j) = std::move(q);
            }
            m(i, c) = 0;
        }
        divisor = pivot;
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rows = std::move(m);
    return out;
}

inline Echelon fraction_free_echelon(ZMatrix m) {
    const std::size_t limit = m.cols();
    return fraction_free_echelon(std::move(m), limit);
}

inline std::size_t rank(const ZMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return fraction_free_echelon(m).rank();
}

/// How free variables of an underdetermined system are fixed.
enum class FreeVariables { zero, one };

/// Solves a x = b exactly. Returns nothing when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(const ZMatrix& a, const std::vector<Integer>& b,
                                                  FreeVariables policy = FreeVariables::zero) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    const std::size_t n = a.cols();
    ZMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const Echelon e = fraction_free_echelon(std::move(aug), n);
    for (std::size_t i = e.rank(); i < e.rows.rows(); ++i)
        if (e.rows(i, n) != 0) return std::nullopt;

    std::vector<Rational> x(n, policy == FreeVariables::zero ? Rational(0) : Rational(1));
    for (std::size_t r = e.rank(); r-- > 0;) {
        const std::size_t c = e.pivot_cols[r];
        Rational acc(e.rows(r, n));
        for (std::size_t j = c + 1; j < n; ++j)
            if (e.rows(r, j) != 0) acc -= Rational(e.rows(r, j)) * x[j];
        x[c] = acc / Rational(e.rows(r, c));
    }
    return x;
}

}  // namespace catnerve
