#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "simpchrom/bigint.hpp"
#include "simpchrom/errors.hpp"

namespace simpchrom::linalg {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;
using ZMatrix = std::vector<std::vector<Integer>>;
using ZVector = std::vector<Integer>;

// Row echelon form in place; returns pivot column per used row.
inline std::vector<size_t> echelon(QMatrix& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[row], a[sel]);
        Rational inv = a[row][col];
        for (size_t j = col; j < cols; ++j) a[row][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(QMatrix a) { return static_cast<int>(echelon(a).size()); }

// Basis of the right kernel {x : a x = 0}.
inline QMatrix nullspace(QMatrix a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    auto pivots = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    QMatrix basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVector v(cols, Rational(0));
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct SolveResult {
    enum class Kind { none, unique, underdetermined } kind = Kind::none;
    QVector x;  // populated for unique
};

// Solve a x = b exactly.
inline SolveResult solve(QMatrix a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("solve: row count mismatch");
    SolveResult res;
    if (a.empty()) {
        res.kind = SolveResult::Kind::unique;
        return res;
    }
    size_t cols = a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a);
    // inconsistent iff some pivot sits in the appended column
    if (!pivots.empty() && pivots.back() == cols) {
        res.kind = SolveResult::Kind::none;
        return res;
    }
    if (pivots.size() < cols) {
        res.kind = SolveResult::Kind::underdetermined;
        return res;
    }
    res.kind = SolveResult::Kind::unique;
    res.x.assign(cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) res.x[pivots[i]] = a[i][cols];
    return res;
}

// Fraction-free determinant of a square integer matrix.
inline Integer det_bareiss(ZMatrix a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DimensionMismatch("determinant needs a square matrix");
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t sel = k + 1;
            while (sel < n && a[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(a[k], a[sel]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Scale a rational vector to a primitive integer vector (gcd 1), preserving
// orientation. Zero vectors are rejected.
inline ZVector primitive(const QVector& v) {
    Integer lcm = 1;
    for (const auto& q : v)
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q));
    ZVector out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        Integer z = boost::multiprecision::numerator(q) *
                    (lcm / boost::multiprecision::denominator(q));
        g = boost::multiprecision::gcd(g, z);
        out.push_back(std::move(z));
    }
    if (g == 0) throw InvalidArgument("cannot make the zero vector primitive");
    for (auto& z : out) z /= g;
    return out;
}

// Basis of {x in Z^n : k x = 0} via column reduction with a tracked
// unimodular transform; the result is automatically saturated (it is the
// full integer kernel, not a finite-index sublattice).
inline ZMatrix integer_kernel(ZMatrix k, size_t n_cols) {
    size_t rows = k.size();
    for (const auto& row : k)
        if (row.size() != n_cols) throw DimensionMismatch("kernel: ragged matrix");
    // u starts as identity; columns transform together with k's columns
    ZMatrix u(n_cols, ZVector(n_cols, 0));
    for (size_t i = 0; i < n_cols; ++i) u[i][i] = 1;

    auto col_addmul = [&](size_t dst, size_t src, const Integer& f) {
        for (size_t i = 0; i < rows; ++i) k[i][dst] += f * k[i][src];
        for (size_t i = 0; i < n_cols; ++i) u[i][dst] += f * u[i][src];
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < rows; ++i) std::swap(k[i][a], k[i][b]);
        for (size_t i = 0; i < n_cols; ++i) std::swap(u[i][a], u[i][b]);
    };

    size_t col = 0;
    for (size_t row = 0; row < rows && col < n_cols; ++row) {
        // gcd sweep: make every entry but one in this row (from col on) zero
        for (;;) {
            size_t best = n_cols;
            for (size_t j = col; j < n_cols; ++j)
                if (k[row][j] != 0 &&
                    (best == n_cols ||
                     boost::multiprecision::abs(k[row][j]) < boost::multiprecision::abs(k[row][best])))
                    best = j;
            if (best == n_cols) break;  // row already clear
            bool others = false;
            for (size_t j = col; j < n_cols; ++j) {
                if (j == best || k[row][j] == 0) continue;
                Integer q = k[row][j] / k[row][best];  // truncated division
                col_addmul(j, best, -q);
                if (k[row][j] != 0) others = true;
            }
            if (!others) {
                col_swap(col, best);
                ++col;
                break;
            }
        }
    }
    // columns col..n-1 of k are zero; the matching u columns span the kernel
    ZMatrix basis;
    for (size_t j = col; j < n_cols; ++j) {
        ZVector v(n_cols);
        for (size_t i = 0; i < n_cols; ++i) v[i] = u[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace simpchrom::linalg
