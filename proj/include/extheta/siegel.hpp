#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "extheta/bipoly.hpp"
#include "extheta/fiber.hpp"
#include "extheta/g2.hpp"
#include "extheta/jordan.hpp"

namespace extheta {

// Symmetric 3x3 rational matrix with integral diagonal and half-integral
// off-diagonal entries (2 T0 integral with even diagonal).
struct HalfIntegralMatrix {
    Mat<Rational> m;

    explicit HalfIntegralMatrix(Mat<Rational> mat) : m(std::move(mat)) {
        if (m.rows != 3 || m.cols != 3) throw std::invalid_argument("HalfIntegralMatrix: need 3x3");
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("HalfIntegralMatrix: not symmetric");
                Rational two = 2 * m.at(i, j);
                if (!is_integer(two) || (i == j && !is_integer(m.at(i, j))))
                    throw std::invalid_argument("HalfIntegralMatrix: not half-integral");
            }
    }

    bool is_zero() const {
        for (const auto& v : m.data)
            if (v != 0) return false;
        return true;
    }

    // all principal minors nonnegative
    bool is_psd() const {
        for (int i = 0; i < 3; ++i)
            if (m.at(i, i) < 0) return false;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (m.at(i, i) * m.at(j, j) - m.at(i, j) * m.at(i, j) < 0) return false;
        Rational det = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                       m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                       m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        return det >= 0;
    }

    friend bool operator==(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b) { return a.m == b.m; }
};

// All rank <= 1, positive semidefinite T in J_R with project_h3q(T) = T0.
// The diagonal is pinned to diag(T0); each off-diagonal slot runs over an
// affine norm shell {n(a) = c_j c_k, tr(a) = 2 (T0)_{jk}}; when some c_p != 0
// the slot p octonion is solved from the adjoint equations.
inline std::vector<JordanElement> fiber_over_t0(const HalfIntegralMatrix& t0) {
    if (!t0.is_psd()) throw std::invalid_argument("fiber_over_t0: T0 must be positive semidefinite");
    long c[3], tr2[3], norms[3];
    for (int i = 0; i < 3; ++i) c[i] = t0.m.at(i, i).get_num().get_si();
    tr2[0] = Rational(2 * t0.m.at(1, 2)).get_num().get_si();
    tr2[1] = Rational(2 * t0.m.at(0, 2)).get_num().get_si();
    tr2[2] = Rational(2 * t0.m.at(0, 1)).get_num().get_si();
    for (int i = 0; i < 3; ++i) norms[i] = c[(i + 1) % 3] * c[(i + 2) % 3];

    std::vector<JordanElement> out;
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
        // psd with zero diagonal forces T0 = 0; the fiber is the zero element
        out.push_back(JordanElement());
        return out;
    }
    // choose the pivot with the smallest complementary search space
    int p = -1;
    std::size_t best = 0;
    for (int q = 0; q < 3; ++q) {
        if (c[q] == 0) continue;
        std::size_t cost = shell_with_trace(norms[(q + 1) % 3], tr2[(q + 1) % 3]).size() *
                           shell_with_trace(norms[(q + 2) % 3], tr2[(q + 2) % 3]).size();
        if (p < 0 || cost < best) {
            p = q;
            best = cost;
        }
    }
    int j = (p + 1) % 3, k = (p + 2) % 3;
    // integer prefilters on doubled CD coordinates; survivors get the exact
    // adjoint test
    const auto& cb = CoxeterBasis::get();
    long dict[8][8];
    for (int r = 0; r < 8; ++r)
        for (int cc = 0; cc < 8; ++cc) dict[r][cc] = cb.cd_to_cox.at(r, cc).get_num().get_si();
    const long cp2 = 2 * c[p];
    auto sj_list = shell_with_trace(norms[j], tr2[j]);
    auto sk_list = shell_with_trace(norms[k], tr2[k]);
    std::array<long, 8> prod;
    for (const auto& sj : sj_list)
        for (const auto& sk : sk_list) {
            oct_mul_int(sj.two_cd, sk.two_cd, prod);  // 4 a_j a_k
            // conj, then divide by 2 c_p to get doubled coordinates of a_p
            std::array<int, 8> ap2;
            bool ok = true;
            for (int i = 0; i < 8 && ok; ++i) {
                long v = (i == 0 ? prod[0] : -prod[i]);
                ok = v % cp2 == 0;
                if (ok) ap2[i] = static_cast<int>(v / cp2);
            }
            if (!ok) continue;
            if (ap2[0] != tr2[p]) continue;  // trace
            long nrm4 = 0;
            for (int i = 0; i < 8; ++i) nrm4 += static_cast<long>(ap2[i]) * ap2[i];
            if (nrm4 != 4 * norms[p]) continue;
            for (int r = 0; r < 8 && ok; ++r) {  // coxeter integrality
                long acc = 0;
                for (int i = 0; i < 8; ++i) acc += dict[r][i] * ap2[i];
                ok = acc % 2 == 0;
            }
            if (!ok) continue;
            JordanElement t;
            for (int i = 0; i < 3; ++i) t.c[i] = Scalar(Rational(c[i]));
            ShellVec apv;
            apv.two_cd = ap2;
            t.a[p] = apv.octonion();
            t.a[j] = sj.octonion();
            t.a[k] = sk.octonion();
            if (!rank_at_most_one(t)) continue;
            out.push_back(std::move(t));
        }
    std::sort(out.begin(), out.end(), [](const JordanElement& x, const JordanElement& y) {
        auto kx = jr_coords(x), ky = jr_coords(y);
        for (int i = 0; i < 27; ++i) {
            if (kx[i].re != ky[i].re) return kx[i].re < ky[i].re;
        }
        return false;
    });
    return out;
}

// Unnormalized T0 Fourier coefficient of the theta lift:
//   sum over the fiber of a(T) {P_{k1,k2}(T), beta}.
inline BiPolynomial siegel_fc(const HalfIntegralMatrix& t0, const G2Tensor& beta) {
    BiPolynomial total;
    total.degw = beta.k1;
    total.degz = beta.k2;
    for (const auto& t : fiber_over_t0(t0)) {
        BiPolynomial p = pluriharmonic_pair(t, beta);
        if (p.is_zero()) continue;
        total += Scalar(Rational(kim_coeff(t))) * p;
    }
    return total;
}

// Weight (k1+2k2+4, k1+k2+4, k2+4) of the lift family.
struct SiegelWeight {
    long l1, l2, l3;

    static SiegelWeight encode(int k1, int k2) { return {k1 + 2 * k2 + 4, k1 + k2 + 4, k2 + 4}; }
    std::pair<int, int> decode() const {
        int k2 = static_cast<int>(l3 - 4);
        int k1 = static_cast<int>(l2 - l3);
        if (k1 < 0 || k2 < 0 || l1 != k1 + 2 * k2 + 4) throw std::invalid_argument("SiegelWeight: not of lift shape");
        return {k1, k2};
    }
};

// ---- The section-6 tensor recursion -------------------------------------

// Element of the tensor algebra T(J), as a merged term list.
struct TensorAlg {
    struct Term {
        Scalar coeff;
        std::vector<JordanElement> factors;
    };
    std::vector<Term> terms;

    static TensorAlg one() {
        TensorAlg t;
        t.terms.push_back({Scalar(1), {}});
        return t;
    }
    TensorAlg& operator+=(const TensorAlg& o) {
        for (const auto& t : o.terms) terms.push_back(t);
        return *this;
    }
    friend TensorAlg operator*(const Scalar& s, TensorAlg t) {
        for (auto& term : t.terms) term.coeff = s * term.coeff;
        return t;
    }

    using Key = std::vector<Rational>;
    static Key key_of(const std::vector<JordanElement>& fs) {
        Key k;
        for (const auto& f : fs)
            for (const auto& v : jr_coords(f)) {
                k.push_back(v.re);
                k.push_back(v.im);
            }
        k.push_back(Rational(static_cast<long>(fs.size())));
        return k;
    }
    std::map<Key, Scalar> normalized() const {
        std::map<Key, Scalar> m;
        for (const auto& t : terms) {
            if (t.coeff.is_zero()) continue;
            auto k = key_of(t.factors);
            auto it = m.find(k);
            if (it == m.end())
                m.emplace(std::move(k), t.coeff);
            else {
                it->second += t.coeff;
                if (it->second.is_zero()) m.erase(it);
            }
        }
        return m;
    }
    friend bool operator==(const TensorAlg& a, const TensorAlg& b) { return a.normalized() == b.normalized(); }
};

// {E, E'} = Phi_{1,E}(E').
inline JordanElement section6_bracket(const JordanElement& e, const JordanElement& ep) {
    return phi_apply(JordanElement::identity(), e, ep);
}

// {E, V1 (x) ... (x) Vr} extended as a derivation; {E, constant} = 0.
inline TensorAlg bracket_extend(const JordanElement& e, const TensorAlg& t) {
    TensorAlg out;
    for (const auto& term : t.terms)
        for (std::size_t j = 0; j < term.factors.size(); ++j) {
            TensorAlg::Term nt = term;
            nt.factors[j] = section6_bracket(e, term.factors[j]);
            out.terms.push_back(std::move(nt));
        }
    return out;
}

// P_n(E_1,...,E_n) with the scalar weight ell, by the recursion
//   P_{k+1} = P_k (x) E_{k+1} + ell (1,E_{k+1}) P_k + {E_{k+1}, P_k}/2
//             + P_k({E_{k+1}, E_1,...,E_k})/2.
inline TensorAlg pn_recursion(const std::vector<JordanElement>& es, long ell) {
    if (es.empty()) return TensorAlg::one();
    std::vector<JordanElement> head(es.begin(), es.end() - 1);
    const JordanElement& last = es.back();
    TensorAlg pk = pn_recursion(head, ell);

    TensorAlg out;
    for (const auto& term : pk.terms) {
        TensorAlg::Term nt = term;
        nt.factors.push_back(last);
        out.terms.push_back(std::move(nt));
    }
    out += (Scalar(Rational(ell)) * pair_trace(JordanElement::identity(), last)) * pk;
    Scalar half(Rational(1, 2));
    out += half * bracket_extend(last, pk);
    // half * sum_j P_k(E_1, ..., {last, E_j}, ..., E_k)
    for (std::size_t j = 0; j < head.size(); ++j) {
        auto mod = head;
        mod[j] = section6_bracket(last, head[j]);
        out += half * pn_recursion(mod, ell);
    }
    return out;
}

// ---- Lemma 6.4: only the leading term contributes ------------------------

namespace detail {

// Basis of J adapted to H_3(Q) + V_3 (x) Theta^0: indices 0..5 are the H_3(Q)
// part, 6..26 are slot s (0..2) x weight-basis index u (0..6).
inline JordanElement adapted_basis(int k) {
    if (k < 3) return JordanElement::e(k);
    if (k < 6) return JordanElement::slot(k - 3, Octonion(1l));
    int s = (k - 6) / 7, u = (k - 6) % 7;
    return JordanElement::slot(s, V7Basis::get().vec[u]);
}

}  // namespace detail

// Verifies that sum over tuples of a J-basis of P_n(E_a) {E_a^vee, beta}
// equals the pure leading tensor sum (Lemma 6.4), exactly, for the given ell.
inline bool leading_term_check(int k1, int k2, const G2Tensor& beta, long ell) {
    const int n = k1 + 2 * k2;
    if (n <= 0) return true;
    static constexpr int cyc[3][2] = {{1, 2}, {2, 0}, {0, 1}};

    using Acc = std::map<TensorAlg::Key, BiPolynomial>;
    Acc lhs, rhs;
    auto add_into = [](Acc& acc, const TensorAlg& t, const BiPolynomial& poly) {
        for (const auto& term : t.terms) {
            if (term.coeff.is_zero()) continue;
            BiPolynomial scaled = term.coeff * poly;
            if (scaled.is_zero()) continue;
            auto key = TensorAlg::key_of(term.factors);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(std::move(key), std::move(scaled));
            else
                it->second += scaled;
        }
    };

    // Enumerate only the tuples with nonzero dual-basis coefficient against beta.
    for (const auto& [key, coeff] : beta.terms) {
        // vector slots: free V3 index; wedge slots: ordered pair choice x V3 pair
        std::vector<int> vidx(k1, 0);
        struct WChoice {
            int swap_uv;  // 0: (p,q), 1: (q,p)
            int i, ip;    // V3 indices of the two p-slots
        };
        std::vector<WChoice> widx(k2, {0, 0, 0});
        auto emit = [&]() {
            std::vector<JordanElement> tuple;
            tuple.reserve(n);
            std::array<int, 6> mono{};
            Scalar sign(1);
            for (int s = 0; s < k1; ++s) {
                tuple.push_back(detail::adapted_basis(6 + vidx[s] * 7 + key[s]));
                ++mono[vidx[s]];
            }
            bool zero = false;
            for (int s = 0; s < k2 && !zero; ++s) {
                int p = key[k1 + s] / 7, q = key[k1 + s] % 7;
                int u1 = widx[s].swap_uv ? q : p, u2 = widx[s].swap_uv ? p : q;
                if (widx[s].swap_uv) sign = -sign;  // wedge antisymmetry on the V7 side
                int i = widx[s].i, ip = widx[s].ip;
                // v_i ^ v_ip expanded in (z23, z31, z12)
                if (i == ip) {
                    zero = true;
                    break;
                }
                int zslot = -1, zsign = 1;
                for (int t = 0; t < 3; ++t) {
                    if (cyc[t][0] == i && cyc[t][1] == ip) {
                        zslot = t;
                        zsign = 1;
                    }
                    if (cyc[t][0] == ip && cyc[t][1] == i) {
                        zslot = t;
                        zsign = -1;
                    }
                }
                if (zsign < 0) sign = -sign;
                ++mono[3 + zslot];
                tuple.push_back(detail::adapted_basis(6 + i * 7 + u1));
                tuple.push_back(detail::adapted_basis(6 + ip * 7 + u2));
            }
            if (zero) return;
            BiPolynomial poly;
            poly.degw = k1;
            poly.degz = k2;
            poly.add_term(mono, sign * coeff);
            add_into(lhs, pn_recursion(tuple, ell), poly);
            TensorAlg pure;
            pure.terms.push_back({Scalar(1), tuple});
            add_into(rhs, pure, poly);
        };
        // iterate all index assignments
        std::function<void(int)> rec_v = [&](int s) {
            if (s == k1) {
                std::function<void(int)> rec_w = [&](int t) {
                    if (t == k2) {
                        emit();
                        return;
                    }
                    for (int sw = 0; sw < 2; ++sw)
                        for (int i = 0; i < 3; ++i)
                            for (int ip = 0; ip < 3; ++ip) {
                                widx[t] = {sw, i, ip};
                                rec_w(t + 1);
                            }
                };
                rec_w(0);
                return;
            }
            for (int i = 0; i < 3; ++i) {
                vidx[s] = i;
                rec_v(s + 1);
            }
        };
        rec_v(0);
    }

    auto cleanup = [](Acc& acc) {
        for (auto it = acc.begin(); it != acc.end();) it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    };
    cleanup(lhs);
    cleanup(rhs);
    return lhs == rhs;
}

// ---- Corollary 1.4: lift detection ---------------------------------------

struct DetectEntry {
    HalfIntegralMatrix t0;
    BiPolynomial coeff;
};

struct DetectResult {
    bool is_lift = false;
    std::vector<std::pair<std::size_t, Scalar>> combination;  // (spanning index, coefficient)
    std::optional<std::size_t> failing_entry;                 // witness when !is_lift
    std::size_t span_dim = 0;
};

// Solves table = sum_j c_j siegel_fc(T0, beta_j) exactly over the spanning
// set of W(k1,k2); returns the combination or a failing T0 certificate.
inline DetectResult detect_lift(const SiegelWeight& lambda, const std::vector<DetectEntry>& table, int bound) {
    auto [k1, k2] = lambda.decode();
    if (k2 <= 0) throw std::invalid_argument("detect_lift: need k2 > 0");
    if (table.empty()) throw std::invalid_argument("detect_lift: empty table");
    SpanningSet span = spanning_set(k1, k2, bound);

    // columns of the linear system
    std::vector<std::vector<BiPolynomial>> cols(span.tensors.size());
    for (std::size_t j = 0; j < span.tensors.size(); ++j) {
        cols[j].reserve(table.size());
        for (const auto& entry : table) cols[j].push_back(siegel_fc(entry.t0, span.tensors[j]));
    }
    // monomial index per entry: union of supports
    std::vector<std::map<std::array<int, 6>, std::size_t>> monos(table.size());
    std::size_t nrows = 0;
    std::vector<std::size_t> row_entry;  // row -> table entry
    for (std::size_t e = 0; e < table.size(); ++e) {
        auto touch = [&](const BiPolynomial& p) {
            for (const auto& [k, v] : p.terms)
                if (monos[e].emplace(k, 0).second) {}
        };
        touch(table[e].coeff);
        for (std::size_t j = 0; j < cols.size(); ++j) touch(cols[j][e]);
        for (auto& [k, idx] : monos[e]) {
            idx = nrows++;
            row_entry.push_back(e);
        }
    }
    Mat<Scalar> m(nrows, cols.size());
    std::vector<Scalar> rhs(nrows);
    for (std::size_t e = 0; e < table.size(); ++e) {
        for (const auto& [k, v] : table[e].coeff.terms) rhs[monos[e][k]] = v;
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [k, v] : cols[j][e].terms) m.at(monos[e][k], j) = v;
    }
    auto sol = solve_exact(m, rhs);
    DetectResult res;
    res.span_dim = span.span_dim;
    if (!sol.solution) {
        res.is_lift = false;
        res.failing_entry = row_entry[sol.bad_row];
        return res;
    }
    res.is_lift = true;
    for (std::size_t j = 0; j < sol.solution->size(); ++j)
        if (!(*sol.solution)[j].is_zero()) res.combination.emplace_back(j, (*sol.solution)[j]);
    return res;
}

}  // namespace extheta
