#pragma once

#include <functional>
#include <vector>

#include "extheta/freudenthal.hpp"
#include "extheta/shells.hpp"

namespace extheta {

namespace detail {

inline void set_rat(Scalar& s, long num, long den = 1) {
    mpq_set_si(s.re.get_mpq_t(), num, den);
    s.re.canonicalize();
    mpq_set_si(s.im.get_mpq_t(), 0, 1);
}

// Exact division of an octonion by a nonzero rational; integrality is checked
// by the caller.
inline Octonion oct_div(const Octonion& x, const Scalar& s) {
    Octonion r;
    Scalar inv = Scalar(1) / s;
    for (int k = 0; k < 8; ++k)
        if (!x.cd[k].is_zero()) r.cd[k] = inv * x.cd[k];
    return r;
}

inline std::vector<Rational> freu_key(const FreudenthalElement& w) {
    std::vector<Rational> key;
    key.reserve(56);
    key.push_back(w.a.re);
    auto push27 = [&](const JordanElement& t) {
        for (auto& v : jr_coords(t)) key.push_back(v.re);
    };
    push27(w.b);
    push27(w.c);
    key.push_back(w.d.re);
    return key;
}

}  // namespace detail

// All rank-one T in J_R with tr(T) = t.  Diagonals of a rank-one integral
// element are sign coherent, so they run over signed compositions of t; the
// off-diagonal entries come from norm shells, with one slot solved from the
// adjoint equations.
inline std::vector<JordanElement> rank_one_with_trace(long t) {
    std::vector<JordanElement> out;
    if (t == 0) return out;  // rank one forces nonzero trace over a definite order
    long sign = t > 0 ? 1 : -1, n = t > 0 ? t : -t;
    for (long c1 = 0; c1 <= n; ++c1)
        for (long c2 = 0; c2 + c1 <= n; ++c2) {
            long c3 = n - c1 - c2;
            long cs[3] = {sign * c1, sign * c2, sign * c3};
            long norms[3];
            for (int i = 0; i < 3; ++i) norms[i] = cs[(i + 1) % 3] * cs[(i + 2) % 3];
            int p = cs[0] != 0 ? 0 : (cs[1] != 0 ? 1 : 2);
            int j = (p + 1) % 3, k = (p + 2) % 3;
            Scalar cp(Rational(cs[p]));
            for (const auto& sj : shell_raw(norms[j]))
                for (const auto& sk : shell_raw(norms[k])) {
                    Octonion aj = sj.octonion(), ak = sk.octonion();
                    Octonion ap = detail::oct_div((aj * ak).conj(), cp);
                    if (!(ap.norm() == Scalar(Rational(norms[p])))) continue;
                    if (!in_coxeter_order(ap)) continue;
                    JordanElement cand;
                    for (int i = 0; i < 3; ++i) cand.c[i] = Scalar(Rational(cs[i]));
                    cand.a[p] = std::move(ap);
                    cand.a[j] = std::move(aj);
                    cand.a[k] = std::move(ak);
                    if (rank_at_most_one(cand)) out.push_back(std::move(cand));
                }
        }
    return out;
}

namespace detail {

// Gram matrix of the trace form on J_R in the jr_basis coordinates.
inline const Mat<Integer>& jr_gram() {
    static const Mat<Integer> g = [] {
        Mat<Integer> m(27, 27);
        for (int r = 0; r < 27; ++r)
            for (int c = 0; c < 27; ++c) {
                Scalar v = pair_trace(jr_basis(r), jr_basis(c));
                m.at(r, c) = v.re.get_num();
            }
        return m;
    }();
    return g;
}

inline JordanElement from_jr_ints(const std::vector<long>& v) {
    JordanElement t;
    for (int k = 0; k < 3; ++k) t.c[k] = Scalar(Rational(v[k]));
    for (int s = 0; s < 3; ++s) {
        std::array<Scalar, 8> cox;
        for (int b = 0; b < 8; ++b) cox[b] = Scalar(Rational(v[3 + 8 * s + b]));
        t.a[s] = from_coxeter(cox);
    }
    return t;
}

// Solutions T2 in J_R of T2^# = lambda * T1 with tr(T2) = trc, for T1 rank one
// with nonzero trace and lambda != 0.  Any solution lies in the Peirce-0
// sublattice of T1 and on the trace-form shell (T2,T2) = trc^2 - 2 lambda tr(T1),
// which makes the search finite.
inline std::vector<JordanElement> solve_adjoint_block(const JordanElement& t1, long lambda, long trc) {
    std::vector<JordanElement> out;
    // integral kernel of z -> T1 o z
    Mat<Integer> op(27, 27);
    for (int col = 0; col < 27; ++col) {
        // 2 (T1 o z) = T1 z + z T1 has integral lattice coordinates
        JordanElement img = jordan_mul(t1, jr_basis(col));
        img += img;
        auto coords = jr_coords(img);
        for (int row = 0; row < 27; ++row) {
            Rational v = coords[row].re;
            if (v.get_den() != 1) throw std::logic_error("solve_adjoint_block: unexpected denominator");
            op.at(row, col) = v.get_num();
        }
    }
    auto ker = integer_kernel(op);
    if (ker.empty()) return out;
    const std::size_t dim = ker.size();

    // Split off the trace: solve sum_r a_r tr(ker_r) = trc over Z, then
    // enumerate the trace-zero sublattice around the particular solution.
    std::vector<Integer> tr(dim);
    for (std::size_t r = 0; r < dim; ++r) tr[r] = ker[r][0] + ker[r][1] + ker[r][2];
    Integer g0 = 0;
    for (const auto& t : tr) g0 = gcd_int(g0, t);
    std::vector<Integer> part(dim, 0);  // particular solution in kernel coordinates
    if (g0 == 0) {
        if (trc != 0) return out;
    } else {
        if (Integer(trc) % g0 != 0) return out;
        // iterative extended gcd across the trace vector
        Integer g = 0;
        for (std::size_t r = 0; r < dim; ++r) {
            if (tr[r] == 0) continue;
            if (g == 0) {
                g = abs(tr[r]);
                part[r] = tr[r] > 0 ? 1 : -1;
            } else {
                Integer s, t, gg;
                mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), tr[r].get_mpz_t());
                for (std::size_t p = 0; p < r; ++p) part[p] *= s;
                part[r] = t;
                g = gg;
            }
        }
        Integer scale = Integer(trc) / g0;
        for (auto& p : part) p *= scale;
    }
    // trace-zero sublattice of the kernel coordinates
    Mat<Integer> trrow(1, dim);
    for (std::size_t r = 0; r < dim; ++r) trrow.at(0, r) = tr[r];
    auto tker = integer_kernel(trrow);  // rows: basis of {a : sum a_r tr_r = 0}
    const std::size_t fdim = tker.size();

    // Gram of the trace form on the kernel lattice, then restricted data
    const auto& gj = jr_gram();
    Mat<Integer> g(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            Integer acc = 0;
            for (int i = 0; i < 27; ++i) {
                if (ker[r][i] == 0) continue;
                for (int j = 0; j < 27; ++j) {
                    if (ker[c][j] == 0) continue;
                    acc += ker[r][i] * gj.at(i, j) * ker[c][j];
                }
            }
            g.at(r, c) = acc;
        }
    Mat<Integer> gf(fdim, fdim);  // B(f_a, f_b)
    std::vector<Integer> gcross(fdim);  // B(part, f_a)
    Integer qpart = 0;                  // B(part, part)
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            if (part[a] == 0 || part[b] == 0 || g.at(a, b) == 0) continue;
            qpart += part[a] * g.at(a, b) * part[b];
        }
    for (std::size_t x = 0; x < fdim; ++x) {
        Integer acc = 0;
        for (std::size_t a = 0; a < dim; ++a) {
            if (part[a] == 0) continue;
            for (std::size_t b = 0; b < dim; ++b) acc += part[a] * g.at(a, b) * tker[x][b];
        }
        gcross[x] = acc;
        for (std::size_t y = 0; y < fdim; ++y) {
            Integer acc2 = 0;
            for (std::size_t a = 0; a < dim; ++a) {
                if (tker[x][a] == 0) continue;
                for (std::size_t b = 0; b < dim; ++b) acc2 += tker[x][a] * g.at(a, b) * tker[y][b];
            }
            gf.at(x, y) = acc2;
        }
    }

    Rational t1trace = t1.trace().re;
    Rational target = Rational(trc) * Rational(trc) - 2 * Rational(lambda) * t1trace;
    // Q(part + K y) = target:  y^T gf y + 2 gcross.y + qpart = target; complete
    // the square with a rational center shift h = gf^{-1} gcross.
    Mat<Rational> gfq(fdim, fdim);
    for (std::size_t x = 0; x < fdim; ++x)
        for (std::size_t y = 0; y < fdim; ++y) gfq.at(x, y) = Rational(gf.at(x, y));
    std::vector<Rational> rhs(fdim), shift(fdim);
    for (std::size_t x = 0; x < fdim; ++x) rhs[x] = Rational(gcross[x]);
    if (fdim > 0) {
        auto sol = solve_exact(gfq, rhs);
        if (!sol.solution) throw std::logic_error("solve_adjoint_block: degenerate restricted form");
        shift = *sol.solution;
    }
    Rational centered_target = target - Rational(qpart);
    for (std::size_t x = 0; x < fdim; ++x) centered_target += shift[x] * rhs[x];

    JordanElement want = Scalar(Rational(lambda)) * t1;
    for (const auto& y : quadratic_shell_centered(gf, shift, centered_target)) {
        std::vector<long> coords(27, 0);
        for (std::size_t r = 0; r < dim; ++r) {
            Integer coef = part[r];
            for (std::size_t x = 0; x < fdim; ++x) coef += Integer(y[x]) * tker[x][r];
            if (coef == 0) continue;
            long cl = static_cast<long>(coef.get_si());
            for (int i = 0; i < 27; ++i) coords[i] += cl * static_cast<long>(ker[r][i].get_si());
        }
        JordanElement t2 = from_jr_ints(coords);
        if (!(t2.trace() == Scalar(Rational(trc)))) continue;
        if (!(t2.adjoint() == want)) continue;
        out.push_back(std::move(t2));
    }
    return out;
}

inline bool is_monomial_diag(const JordanElement& t, int& idx, long& val) {
    for (const auto& o : t.a)
        if (!o.is_zero()) return false;
    idx = -1;
    for (int k = 0; k < 3; ++k) {
        if (t.c[k].is_zero()) continue;
        if (idx >= 0) return false;
        idx = k;
        if (!t.c[k].is_integral()) return false;
        val = t.c[k].re.get_num().get_si();
    }
    return idx >= 0;
}

inline long gcd_ll(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::array<long, 27> jr_coords_int(const JordanElement& t) {
    std::array<long, 27> out;
    auto coords = jr_coords(t);
    for (int k = 0; k < 27; ++k) out[k] = coords[k].re.get_num().get_si();
    return out;
}

}  // namespace detail

// Streaming enumeration of the rank-one fiber over an integral binary cubic
// with vanishing leading coefficient.  The callback receives each element of
// {w in W_{J_R} : rk(w) = 1, pr_I(w) = w0} together with its content d_w;
// elements are built in a reused workspace, so callers must copy anything
// they keep.
template <typename Fn>
void fiber_rank_one_stream(const BinaryCubic& w0, const JordanPairingTag& tag, Fn&& fn) {
    if (!tag.is_identity_e())
        throw std::invalid_argument("fiber_rank_one: only the I-projection fiber is enumerable");
    if (w0.coeff[0] != 0)
        throw std::invalid_argument("fiber_rank_one: targets with nonzero u^3 coefficient are unsupported");
    for (int k = 1; k < 4; ++k)
        if (!is_integer(w0.coeff[k])) return;  // lattice fiber over a non-integral cubic is empty
    const long B = w0.coeff[1].get_num().get_si();
    const long C = w0.coeff[2].get_num().get_si();
    const long D = w0.coeff[3].get_num().get_si();

    FreudenthalElement w;
    detail::set_rat(w.a, 0);
    detail::set_rat(w.d, D);

    if (D != 0) {
        if (B == 0) {
            // b = d^{-1} c^# must vanish: c is rank <= 1 with n(c) = 0
            for (auto& t2 : rank_one_with_trace(C)) {
                long g = detail::gcd_ll(D, 0);
                for (long v : detail::jr_coords_int(t2)) g = detail::gcd_ll(g, v);
                w.b = JordanElement();
                w.c = std::move(t2);
                fn(w, g);
            }
            if (C == 0) {
                w.b = JordanElement();
                w.c = JordanElement();
                fn(w, D > 0 ? D : -D);  // (0,0,0,D) itself is rank one
            }
            return;
        }
        for (const auto& t1 : rank_one_with_trace(B)) {
            w.b = t1;
            auto t1_ints = detail::jr_coords_int(t1);
            long g1 = D;
            for (long v : t1_ints) g1 = detail::gcd_ll(g1, v);
            int di;
            long t;
            if (detail::is_monomial_diag(t1, di, t)) {
                // T2 lives in the complementary 2x2 block: diagonal (cj,ck) with
                // cj+ck = C, cj ck - n(s) = D t, octonion s free in R_Theta.
                int j = (di + 1) % 3, k = (di + 2) % 3;
                long disc0 = C * C - 4 * D * t;
                if (disc0 < 0) continue;
                long vmax = static_cast<long>(isqrt_floor(Integer(disc0)).get_si());
                w.c = JordanElement();
                for (long v = -vmax; v <= vmax; ++v) {
                    if (((C - v) & 1L) != 0) continue;
                    long rem = disc0 - v * v;
                    if (rem % 4 != 0) continue;
                    long n = rem / 4;
                    long cj = (C + v) / 2, ck = (C - v) / 2;
                    long g2 = detail::gcd_ll(detail::gcd_ll(g1, cj), ck);
                    detail::set_rat(w.c.c[j], cj);
                    detail::set_rat(w.c.c[k], ck);
                    for (const auto& s : shell_raw(n)) {
                        for (int b = 0; b < 8; ++b) detail::set_rat(w.c.a[di].cd[b], s.two_cd[b], 2);
                        long g = g2;
                        if (g != 1)
                            for (int b = 0; b < 8 && g != 1; ++b) g = detail::gcd_ll(g, s.cox[b]);
                        fn(w, g);
                    }
                }
            } else {
                for (auto& t2 : detail::solve_adjoint_block(t1, D, C)) {
                    long g = g1;
                    for (long v : detail::jr_coords_int(t2)) g = detail::gcd_ll(g, v);
                    w.c = std::move(t2);
                    fn(w, g);
                }
            }
        }
        return;
    }

    // D = 0: w = (0,b,c,0) is rank <= 1 iff b^# = 0, c^# = 0 and Phi_{c,b} = 0.
    std::vector<JordanElement> bs = rank_one_with_trace(B);
    if (B == 0) bs.push_back(JordanElement());
    std::vector<JordanElement> cs = rank_one_with_trace(C);
    if (C == 0) cs.push_back(JordanElement());
    for (const auto& t1 : bs)
        for (const auto& t2 : cs) {
            if (t1.is_zero() && t2.is_zero()) continue;
            if (!t1.is_zero() && !t2.is_zero() && !phi_is_zero(t2, t1)) continue;
            long g = 0;
            for (long v : detail::jr_coords_int(t1)) g = detail::gcd_ll(g, v);
            for (long v : detail::jr_coords_int(t2)) g = detail::gcd_ll(g, v);
            w.b = t1;
            w.c = t2;
            fn(w, g);
        }
}

// Materialized fiber in canonical (coordinate-lexicographic) order.
inline std::vector<FreudenthalElement> fiber_rank_one(const BinaryCubic& w0, const JordanPairingTag& tag) {
    std::vector<FreudenthalElement> out;
    fiber_rank_one_stream(w0, tag, [&](const FreudenthalElement& w, long) { out.push_back(w); });
    std::sort(out.begin(), out.end(), [](const FreudenthalElement& x, const FreudenthalElement& y) {
        return detail::freu_key(x) < detail::freu_key(y);
    });
    return out;
}

}  // namespace extheta
