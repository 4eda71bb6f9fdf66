#pragma once

#include <vector>

#include "pdcalc/quadratic.hpp"
#include "pdcalc/rational.hpp"
#include "pdcalc/scalar.hpp"

namespace pdcalc {

template <class F>
using Mat = std::vector<std::vector<F>>;

namespace field {
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline Rational div(const Rational& a, const Rational& b) { return a / b; }
inline QuadExt div(const QuadExt& a, const QuadExt& b) { return a / b; }
} // namespace field

template <class F>
struct RankKernel {
    int rank = 0;
    std::vector<std::vector<F>> kernel_basis; // basis of the right kernel
};

// Exact Gaussian elimination over a field; `one` is the multiplicative unit
// (QuadExt units carry the field discriminant). rank + |kernel| = #columns.
template <class F>
RankKernel<F> rank_kernel(Mat<F> m, std::size_t cols, const F& one) {
    RankKernel<F> out;
    const F zero = one - one;
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> col_has_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && field::is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || field::is_zero(m[i][c])) continue;
            F f = field::div(m[i][c], m[r][c]);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_col_of_row.push_back(c);
        col_has_pivot[c] = true;
        ++r;
    }
    out.rank = static_cast<int>(r);
    for (std::size_t c = 0; c < cols; ++c) {
        if (col_has_pivot[c]) continue;
        std::vector<F> v(cols, zero);
        v[c] = one;
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t pc = pivot_col_of_row[i];
            if (!field::is_zero(m[i][c])) v[pc] = zero - field::div(m[i][c], m[i][pc]);
        }
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

inline RankKernel<Rational> rank_kernel(const Mat<Rational>& m, std::size_t cols) {
    return rank_kernel<Rational>(m, cols, Rational(1));
}

inline int rank_of(const Mat<Rational>& m, std::size_t cols) {
    return rank_kernel(m, cols).rank;
}

// Solve A x = b over Q for square nonsingular A.
inline std::vector<Rational> solve_square(Mat<Rational> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw validation_error("singular system in solve_square");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Fraction-free Bareiss determinant over an integral domain (rationals or
// polynomials). All divisions are exact by construction.
inline Scalar bareiss_det(Mat<Scalar> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw validation_error("bareiss_det requires a square matrix");
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
        prev = m[k][k];
    }
    Scalar det = m[n - 1][n - 1];
    return sign < 0 ? Scalar(0) - det : det;
}

// Integer Bareiss fast path for rational matrices: clear denominators per row,
// run cpp_int elimination, divide the row factors back out.
inline Rational bareiss_det_rational(const Mat<Rational>& rm) {
    const std::size_t n = rm.size();
    if (n == 0) return 1;
    Mat<Int> m(n, std::vector<Int>(n));
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (rm[i].size() != n) throw validation_error("bareiss_det requires a square matrix");
        Int l = 1;
        for (const auto& x : rm[i]) l = lcm(l, denominator(x));
        scale /= Rational(l);
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = numerator(rm[i][j]) * (l / denominator(rm[i][j]));
    }
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    Rational det = Rational(m[n - 1][n - 1]) * scale;
    return sign < 0 ? -det : det;
}

} // namespace pdcalc
