#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"

namespace bicross {

using Vec = std::vector<CycScalar>;

// Dense matrix over Q(zeta_N). Everything here is exact Gaussian elimination;
// sizes stay small (a few hundred at most) so O(n^3) with exact scalars is fine.
struct Mat {
    long rows = 0, cols = 0;
    std::vector<Vec> a;  // row major

    Mat() = default;
    Mat(long r, long c) : rows(r), cols(c), a(r, Vec(c, CycScalar::zero())) {}

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m.a[i][i] = CycScalar::one();
        return m;
    }

    CycScalar& at(long i, long j) { return a[i][j]; }
    const CycScalar& at(long i, long j) const { return a[i][j]; }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    Mat transposed() const {
        Mat t(cols, rows);
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
        return t;
    }

    CycScalar trace() const {
        CycScalar s = CycScalar::zero();
        for (long i = 0; i < rows && i < cols; ++i) s += a[i][i];
        return s;
    }
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul shape mismatch");
    Mat r(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            if (x.a[i][k].is_zero()) continue;
            for (long j = 0; j < y.cols; ++j) {
                if (y.a[k][j].is_zero()) continue;
                r.a[i][j] += x.a[i][k] * y.a[k][j];
            }
        }
    return r;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
    if ((long)v.size() != m.cols) throw std::invalid_argument("mat_vec shape mismatch");
    Vec r(m.rows, CycScalar::zero());
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j)
            if (!m.a[i][j].is_zero() && !v[j].is_zero()) r[i] += m.a[i][j] * v[j];
    return r;
}

inline Mat mat_add(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add shape mismatch");
    Mat r = x;
    for (long i = 0; i < x.rows; ++i)
        for (long j = 0; j < x.cols; ++j) r.a[i][j] += y.a[i][j];
    return r;
}

inline Mat mat_scale(const CycScalar& c, const Mat& x) {
    Mat r = x;
    for (auto& row : r.a)
        for (auto& v : row) v *= c;
    return r;
}

// In-place row echelon. Returns pivot columns.
inline std::vector<long> row_echelon(Mat& m) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols && row < m.rows; ++col) {
        long p = -1;
        for (long i = row; i < m.rows; ++i)
            if (!m.a[i][col].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m.a[p], m.a[row]);
        CycScalar inv = m.a[row][col].inverse();
        for (long j = col; j < m.cols; ++j) m.a[row][j] *= inv;
        for (long i = 0; i < m.rows; ++i) {
            if (i == row || m.a[i][col].is_zero()) continue;
            CycScalar f = m.a[i][col];
            for (long j = col; j < m.cols; ++j) m.a[i][j] -= f * m.a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline long rank(Mat m) { return (long)row_echelon(m).size(); }

// Basis of the right kernel {x : M x = 0}.
inline std::vector<Vec> kernel_basis(Mat m) {
    auto pivots = row_echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (long c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (long free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec x(m.cols, CycScalar::zero());
        x[free] = CycScalar::one();
        for (long r = 0; r < (long)pivots.size(); ++r) x[pivots[r]] = -m.a[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

// One solution of A x = b, or nullopt when inconsistent.
inline std::optional<Vec> solve(const Mat& A, const Vec& b) {
    Mat aug(A.rows, A.cols + 1);
    for (long i = 0; i < A.rows; ++i) {
        for (long j = 0; j < A.cols; ++j) aug.a[i][j] = A.a[i][j];
        aug.a[i][A.cols] = b[i];
    }
    auto pivots = row_echelon(aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    Vec x(A.cols, CycScalar::zero());
    for (long r = 0; r < (long)pivots.size(); ++r) x[pivots[r]] = aug.a[r][A.cols];
    return x;
}

inline std::optional<Mat> inverse(const Mat& A) {
    if (A.rows != A.cols) return std::nullopt;
    long n = A.rows;
    Mat aug(n, 2 * n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) aug.a[i][j] = A.a[i][j];
        aug.a[i][n + i] = CycScalar::one();
    }
    auto pivots = row_echelon(aug);
    if ((long)pivots.size() != n || pivots[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv.a[i][j] = aug.a[i][n + j];
    return inv;
}

// Rank of the span of a list of vectors.
inline long span_rank(const std::vector<Vec>& vs) {
    if (vs.empty()) return 0;
    Mat m((long)vs.size(), (long)vs[0].size());
    for (size_t i = 0; i < vs.size(); ++i) m.a[i] = vs[i];
    return rank(std::move(m));
}

inline bool span_contains(const std::vector<Vec>& basis, const Vec& v) {
    long r0 = span_rank(basis);
    auto ext = basis;
    ext.push_back(v);
    return span_rank(ext) == r0;
}

inline bool span_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    long ra = span_rank(a), rb = span_rank(b);
    if (ra != rb) return false;
    auto all = a;
    all.insert(all.end(), b.begin(), b.end());
    return span_rank(all) == ra;
}

// Coordinates of v in the given (independent) spanning vectors, or nullopt.
inline std::optional<Vec> express_in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return std::nullopt;
    Mat A((long)v.size(), (long)basis.size());
    for (long j = 0; j < (long)basis.size(); ++j)
        for (long i = 0; i < (long)v.size(); ++i) A.a[i][j] = basis[j][i];
    return solve(A, v);
}

}  // namespace bicross
