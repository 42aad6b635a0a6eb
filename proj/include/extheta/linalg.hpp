#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "extheta/scalar.hpp"

namespace extheta {

// Dense matrix over an exact field (Rational or GaussianRational).
template <typename F>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<F> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    F& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const F& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = F(1);
        return m;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.rows, b.cols);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t k = 0; k < a.cols; ++k) {
                const F& v = a.at(i, k);
                if (v == F(0)) continue;
                for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += v * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

// In-place reduction to row echelon form; returns the pivot columns.
// If `reduced`, back-substitutes to RREF.
template <typename F>
std::vector<std::size_t> row_echelon(Mat<F>& m, bool reduced = true) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c) == F(0)) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        F inv = F(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = reduced ? 0 : r + 1; i < m.rows; ++i) {
            if (i == r) continue;
            const F f = m.at(i, c);
            if (f == F(0)) continue;
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename F>
std::size_t rank(Mat<F> m) {
    return row_echelon(m, false).size();
}

// Basis of the right kernel {x : m x = 0}.
template <typename F>
std::vector<std::vector<F>> kernel_basis(Mat<F> m) {
    auto pivots = row_echelon(m, true);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> ker;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(m.cols);
        v[c] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, c);
        ker.push_back(std::move(v));
    }
    return ker;
}

template <typename F>
Mat<F> inverse(Mat<F> m) {
    const std::size_t n = m.rows;
    Mat<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = F(1);
    }
    auto piv = row_echelon(aug, true);
    // pivots must all land in the left block
    if (piv.size() != n || piv[n - 1] >= n) throw std::domain_error("inverse: singular matrix");
    Mat<F> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

// Exact least-structure solve of M x = rhs.  Returns x, or the index of a row
// witnessing inconsistency.
template <typename F>
struct SolveResult {
    std::optional<std::vector<F>> solution;
    std::size_t bad_row = 0;  // meaningful when !solution
};

template <typename F>
SolveResult<F> solve_exact(const Mat<F>& m, const std::vector<F>& rhs) {
    Mat<F> aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = rhs[i];
    }
    // Track original row indices through swaps so inconsistency can be attributed.
    std::vector<std::size_t> rowid(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) rowid[i] = i;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && aug.at(p, c) == F(0)) ++p;
        if (p == m.rows) continue;
        if (p != r) {
            for (std::size_t j = c; j <= m.cols; ++j) std::swap(aug.at(p, j), aug.at(r, j));
            std::swap(rowid[p], rowid[r]);
        }
        F inv = F(1) / aug.at(r, c);
        for (std::size_t j = c; j <= m.cols; ++j) aug.at(r, j) = aug.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const F f = aug.at(i, c);
            if (f == F(0)) continue;
            for (std::size_t j = c; j <= m.cols; ++j) aug.at(i, j) = aug.at(i, j) - f * aug.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m.rows; ++i)
        if (!(aug.at(i, m.cols) == F(0))) return {std::nullopt, rowid[i]};
    std::vector<F> x(m.cols);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols);
    return {std::move(x), 0};
}

// Saturated integer kernel {x in Z^n : A x = 0} of an integer matrix, via
// row-reduction of A^T with a unimodular transform.  Rows of U matching zero
// rows of the reduced A^T form a basis of the kernel lattice.
inline std::vector<std::vector<Integer>> integer_kernel(const Mat<Integer>& a) {
    const std::size_t n = a.cols, m = a.rows;
    Mat<Integer> b(n, m);  // A^T
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) b.at(j, i) = a.at(i, j);
    Mat<Integer> u = Mat<Integer>::identity(n);

    auto row_axpy = [&](Mat<Integer>& mm, std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t j = 0; j < mm.cols; ++j) mm.at(dst, j) -= q * mm.at(src, j);
    };
    auto row_swap = [&](Mat<Integer>& mm, std::size_t x, std::size_t y) {
        for (std::size_t j = 0; j < mm.cols; ++j) std::swap(mm.at(x, j), mm.at(y, j));
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        // Euclidean elimination in column c among rows >= r.
        while (true) {
            std::size_t p = n;
            for (std::size_t i = r; i < n; ++i)
                if (b.at(i, c) != 0 && (p == n || abs(b.at(i, c)) < abs(b.at(p, c)))) p = i;
            if (p == n) break;
            if (p != r) {
                row_swap(b, p, r);
                row_swap(u, p, r);
            }
            bool done = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (b.at(i, c) == 0) continue;
                Integer q = b.at(i, c) / b.at(r, c);  // truncated division is fine here
                row_axpy(b, i, r, q);
                row_axpy(u, i, r, q);
                if (b.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (b.at(r, c) != 0) ++r;
    }
    std::vector<std::vector<Integer>> ker;
    for (std::size_t i = r; i < n; ++i) {
        std::vector<Integer> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = u.at(i, j);
        ker.push_back(std::move(v));
    }
    return ker;
}

inline Integer isqrt_floor(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// All integer vectors c with (c + shift)^T G (c + shift) = target, for a
// positive definite integral Gram matrix G and a rational center shift.
// Exact rational LDL^T bound propagation; output in lexicographic order.
inline std::vector<std::vector<long>> quadratic_shell_centered(const Mat<Integer>& gram,
                                                               const std::vector<Rational>& shift,
                                                               const Rational& target) {
    const std::size_t n = gram.rows;
    std::vector<std::vector<long>> out;
    if (target < 0) return out;
    if (n == 0) {
        if (target == 0) out.push_back({});
        return out;
    }
    // LDL^T: Q(x) = sum_i d_i (x_i + sum_{j>i} mu_{ij} x_j)^2 at x = c + shift
    Mat<Rational> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.at(i, j) = Rational(gram.at(i, j));
    std::vector<Rational> d(n);
    Mat<Rational> mu(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mu.at(i, j) = 0;
        mu.at(i, i) = 1;
    }
    Mat<Rational> a = g;
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = a.at(k, k);
        if (!(d[k] > 0)) throw std::domain_error("quadratic_shell: Gram not positive definite");
        for (std::size_t j = k + 1; j < n; ++j) mu.at(k, j) = a.at(k, j) / d[k];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a.at(i, j) -= a.at(i, k) * a.at(k, j) / d[k];
    }

    std::vector<long> c(n, 0);
    // Depth-first from the last coordinate down, exact interval bounds.
    auto rec = [&](auto&& self, std::size_t level, const Rational& budget) -> void {
        // remaining budget for d[level] (c + ctr)^2 + lower levels
        const Rational& dk = d[level];
        Rational ctr = shift[level];  // sum_{j>level} mu[level][j] (c_j + shift_j)
        for (std::size_t j = level + 1; j < n; ++j) {
            if (mu.at(level, j) == 0) continue;
            Rational xj = Rational(c[j]) + shift[j];
            if (xj != 0) ctr += mu.at(level, j) * xj;
        }
        // |c + ctr| <= sqrt(budget/dk); exact integer interval via integer sqrt
        Rational r2 = budget / dk;
        auto ok = [&](long v) {
            Rational t = Rational(v) + ctr;
            return t * t <= r2;
        };
        // sqrt(a/b) = sqrt(ab)/b with s = floor(sqrt(ab))
        const Integer &a = r2.get_num(), &b = r2.get_den();
        const Integer &p = ctr.get_num(), &q = ctr.get_den();
        Integer s = isqrt_floor(a * b);
        Integer lo_num = -p * b - q * s, hi_num = -p * b + q * s, den = q * b;
        Integer lo_i, hi_i;
        mpz_cdiv_q(lo_i.get_mpz_t(), lo_num.get_mpz_t(), den.get_mpz_t());
        mpz_fdiv_q(hi_i.get_mpz_t(), hi_num.get_mpz_t(), den.get_mpz_t());
        long lo = static_cast<long>(lo_i.get_si()), hi = static_cast<long>(hi_i.get_si());
        // s is a floor approximation of the true radius; widen then trim
        --lo;
        ++hi;
        while (lo <= hi && !ok(lo)) ++lo;
        while (hi >= lo && !ok(hi)) --hi;
        if (hi < lo) return;
        for (long v = lo; v <= hi; ++v) {
            c[level] = v;
            Rational t = Rational(v) + ctr;
            Rational used = dk * t * t;
            if (level == 0) {
                if (used == budget) out.push_back(c);
            } else {
                self(self, level - 1, budget - used);
            }
        }
        c[level] = 0;
    };
    rec(rec, n - 1, target);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<long>> quadratic_shell(const Mat<Integer>& gram, const Integer& target) {
    return quadratic_shell_centered(gram, std::vector<Rational>(gram.rows), Rational(target));
}

}  // namespace extheta
