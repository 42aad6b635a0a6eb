#pragma once

#include <map>
#include <vector>

#include "extheta/linalg.hpp"
#include "extheta/octonion.hpp"

namespace extheta {

// Weight basis of the trace-zero octonions over Q(i):
//   u0 = eps1 - eps2, e1, e2, e3, e1*, e2*, e3*
// in the order (u0, e1, e2, e3, e1*, e2*, e3*).
struct V7Basis {
    std::array<Octonion, 7> vec;
    Mat<Scalar> to_v7;  // 8x8: CD coords -> (unit, basis) coords

    V7Basis() {
        auto pair = [](int slot, Rational re, Rational im) {
            Octonion o;
            o.cd[slot] = Scalar(std::move(re), std::move(im));
            return o;
        };
        Rational h(1, 2);
        Octonion u0 = pair(1, 0, -1);                          // -i (i,0)
        Octonion e1 = pair(2, h, 0) + pair(3, 0, -h);          // ((j,0) - i (k,0))/2
        Octonion e2 = pair(4, h, 0) + pair(5, 0, -h);          // ((0,1) - i (0,i))/2
        Octonion e3 = pair(6, -h, 0) + pair(7, 0, -h);         // ((0,-j) - i (0,k))/2
        Octonion e1s = pair(2, -h, 0) + pair(3, 0, -h);
        Octonion e2s = pair(4, -h, 0) + pair(5, 0, -h);
        Octonion e3s = pair(6, h, 0) + pair(7, 0, -h);
        vec = {u0, e1, e2, e3, e1s, e2s, e3s};

        Mat<Scalar> cols(8, 8);
        cols.at(0, 0) = Scalar(1);  // unit octonion
        for (int c = 0; c < 7; ++c)
            for (int r = 0; r < 8; ++r) cols.at(r, c + 1) = vec[c].cd[r];
        to_v7 = inverse(cols);
    }
    static const V7Basis& get() {
        static const V7Basis b;
        return b;
    }
};

using V7Vector = std::array<Scalar, 7>;

inline V7Vector v7_from_octonion(const Octonion& x) {
    const auto& vb = V7Basis::get();
    std::array<Scalar, 8> full;
    for (int r = 0; r < 8; ++r) {
        Scalar acc;
        for (int k = 0; k < 8; ++k) {
            if (vb.to_v7.at(r, k).is_zero() || x.cd[k].is_zero()) continue;
            acc += vb.to_v7.at(r, k) * x.cd[k];
        }
        full[r] = std::move(acc);
    }
    if (!full[0].is_zero()) throw std::invalid_argument("v7_from_octonion: nonzero trace");
    V7Vector v;
    for (int k = 0; k < 7; ++k) v[k] = std::move(full[k + 1]);
    return v;
}

inline Octonion v7_to_octonion(const V7Vector& v) {
    const auto& vb = V7Basis::get();
    Octonion r;
    for (int k = 0; k < 7; ++k)
        if (!v[k].is_zero()) r += v[k] * vb.vec[k];
    return r;
}

// A derivation of the octonions, recorded as its 7x7 matrix on the weight basis.
struct Derivation {
    Mat<Scalar> m;  // 7x7

    Derivation() : m(7, 7) {}

    V7Vector apply(const V7Vector& v) const {
        V7Vector r;
        for (int i = 0; i < 7; ++i) {
            Scalar acc;
            for (int j = 0; j < 7; ++j) {
                if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
                acc += m.at(i, j) * v[j];
            }
            r[i] = std::move(acc);
        }
        return r;
    }
    Octonion apply_oct(const Octonion& x) const { return v7_to_octonion(apply(v7_from_octonion(x))); }

    friend Derivation operator*(const Scalar& s, const Derivation& d) {
        Derivation r;
        for (auto k = 0u; k < 49u; ++k) r.m.data[k] = s * d.m.data[k];
        return r;
    }
    Derivation& operator+=(const Derivation& o) {
        for (auto k = 0u; k < 49u; ++k) m.data[k] += o.m.data[k];
        return *this;
    }
    friend Derivation bracket(const Derivation& x, const Derivation& y) {
        Derivation r;
        r.m = x.m * y.m;
        Mat<Scalar> yx = y.m * x.m;
        for (auto k = 0u; k < 49u; ++k) r.m.data[k] -= yx.data[k];
        return r;
    }
    bool is_zero() const {
        for (const auto& v : m.data)
            if (!v.is_zero()) return false;
        return true;
    }
};

// D_{x,y} = [L_x,L_y] + [L_x,R_y] + [R_x,R_y], restricted to the trace-zero part.
inline Derivation derivation(const Octonion& x, const Octonion& y) {
    auto op = [&](const Octonion& t) {
        Octonion lxly = x * (y * t) - y * (x * t);
        Octonion lxry = x * (t * y) - (x * t) * y;
        Octonion rxry = (t * y) * x - (t * x) * y;
        return lxly + lxry + rxry;
    };
    const auto& vb = V7Basis::get();
    Derivation d;
    for (int c = 0; c < 7; ++c) {
        V7Vector img = v7_from_octonion(op(vb.vec[c]));
        for (int r = 0; r < 7; ++r) d.m.at(r, c) = std::move(img[r]);
    }
    return d;
}

// Full structure data for g2 = Der(Theta): a 14-dimensional basis, a Cartan
// pair diagonal on the weight basis, the 12 root vectors, and the negative
// simple root vectors y1, y2 for the Borel that makes e1 and e1 ^ e3* highest
// weight vectors.
struct G2Structure {
    std::vector<Derivation> basis;           // 14 elements
    Derivation h1, h2;                       // Cartan basis, diagonal on the weight basis
    std::array<std::array<Scalar, 2>, 7> weight;  // weight of each basis vector under (h1,h2)
    std::vector<std::pair<std::array<Scalar, 2>, Derivation>> roots;  // 12 root vectors
    Derivation y1, y2;  // negative simple root vectors
    Derivation x1, x2;  // positive simple root vectors

    static const G2Structure& get() {
        static const G2Structure s;
        return s;
    }

    G2Structure() {
        const auto& vb = V7Basis::get();
        // Span the derivation algebra from basis pairs.
        std::vector<Derivation> gens;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) gens.push_back(derivation(vb.vec[i], vb.vec[j]));
        // Greedy extraction of an independent subset.
        Mat<Scalar> acc(0, 49);
        std::vector<std::size_t> pivcols;
        for (auto& g : gens) {
            Mat<Scalar> trial(acc.rows + 1, 49);
            trial.data = acc.data;
            trial.data.resize((acc.rows + 1) * 49);
            for (int k = 0; k < 49; ++k) trial.at(acc.rows, k) = g.m.data[k];
            if (rank(trial) > acc.rows) {
                basis.push_back(g);
                acc = std::move(trial);
            }
            if (basis.size() == 14) break;
        }
        if (basis.size() != 14) throw std::logic_error("g2: derivation span has wrong dimension");

        // Cartan: members diagonal on the weight basis.
        Mat<Scalar> cons(42, 14);
        {
            int row = 0;
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) {
                    if (i == j) continue;
                    for (int k = 0; k < 14; ++k) cons.at(row, k) = basis[k].m.at(i, j);
                    ++row;
                }
        }
        auto hker = kernel_basis(cons);
        if (hker.size() != 2) throw std::logic_error("g2: Cartan dimension != 2");
        auto combine = [&](const std::vector<Scalar>& t) {
            Derivation d;
            for (int k = 0; k < 14; ++k)
                if (!t[k].is_zero()) d += t[k] * basis[k];
            return d;
        };
        h1 = combine(hker[0]);
        h2 = combine(hker[1]);
        for (int b = 0; b < 7; ++b) weight[b] = {h1.m.at(b, b), h2.m.at(b, b)};

        // Root spaces: simultaneous eigenvectors of ad(h1), ad(h2).
        std::vector<std::array<Scalar, 2>> cand;
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                if (i == j) continue;
                std::array<Scalar, 2> al = {weight[i][0] - weight[j][0], weight[i][1] - weight[j][1]};
                if (al[0].is_zero() && al[1].is_zero()) continue;
                bool seen = false;
                for (auto& c : cand) seen = seen || (c == al);
                if (!seen) cand.push_back(al);
            }
        for (const auto& al : cand) {
            // [h, d] = alpha(h) d  as linear conditions on the 14 coefficients
            Mat<Scalar> sys(2 * 49, 14);
            for (int k = 0; k < 14; ++k) {
                Derivation b1 = bracket(h1, basis[k]);
                Derivation b2 = bracket(h2, basis[k]);
                for (int e = 0; e < 49; ++e) {
                    sys.at(e, k) = b1.m.data[e] - al[0] * basis[k].m.data[e];
                    sys.at(49 + e, k) = b2.m.data[e] - al[1] * basis[k].m.data[e];
                }
            }
            auto ker = kernel_basis(sys);
            if (ker.size() == 1) roots.emplace_back(al, combine(ker[0]));
        }
        if (roots.size() != 12) throw std::logic_error("g2: expected 12 roots");

        // Rational coordinates for the weights: the roots span a 2-dimensional
        // Q-subspace of Q(i)^2.
        auto q4 = [](const std::array<Scalar, 2>& a) {
            return std::array<Rational, 4>{a[0].re, a[0].im, a[1].re, a[1].im};
        };
        Mat<Rational> span(roots.size(), 4);
        for (std::size_t r = 0; r < roots.size(); ++r) {
            auto v = q4(roots[r].first);
            for (int k = 0; k < 4; ++k) span.at(r, k) = v[k];
        }
        Mat<Rational> span_echelon = span;
        auto piv = row_echelon(span_echelon, true);
        if (piv.size() != 2) throw std::logic_error("g2: root lattice rank != 2");
        auto coords2 = [&](const std::array<Scalar, 2>& a) {
            // solve [rho1 rho2] x = a in the echelon basis
            auto v = q4(a);
            std::array<Rational, 2> out;
            // rows 0,1 of span_echelon are the reduced basis; pivot columns give coordinates
            out[0] = v[piv[0]];
            out[1] = v[piv[1]];
            return out;
        };

        // Positivity functional making e1 (index 1) and e1 ^ e3* highest.
        const int E1 = 1, E3S = 6;
        long fp = 0, fq = 0;
        bool found = false;
        for (long p = -8; p <= 8 && !found; ++p)
            for (long q = -8; q <= 8 && !found; ++q) {
                auto f = [&](const std::array<Scalar, 2>& a) -> Rational {
                    auto c = coords2(a);
                    return Rational(p) * c[0] + Rational(q) * c[1];
                };
                bool ok = true;
                for (auto& r : roots) ok = ok && f(r.first) != 0;
                if (!ok) continue;
                auto wsum = [&](int i, int j) -> Rational {
                    std::array<Scalar, 2> s = {weight[i][0] + weight[j][0], weight[i][1] + weight[j][1]};
                    return f(s);
                };
                Rational we1 = f(weight[E1]);
                for (int b = 0; b < 7 && ok; ++b)
                    if (b != E1) ok = f(weight[b]) < we1;
                Rational top = wsum(E1, E3S);
                for (int i = 0; i < 7 && ok; ++i)
                    for (int j = i + 1; j < 7 && ok; ++j)
                        if (!(i == E1 && j == E3S)) ok = wsum(i, j) < top;
                if (!ok) continue;
                fp = p;
                fq = q;
                found = true;
            }
        if (!found) throw std::logic_error("g2: no Borel functional found");
        auto fval = [&](const std::array<Scalar, 2>& a) -> Rational {
            auto c = coords2(a);
            return Rational(fp) * c[0] + Rational(fq) * c[1];
        };

        std::vector<std::size_t> pos;
        for (std::size_t r = 0; r < roots.size(); ++r)
            if (fval(roots[r].first) > 0) pos.push_back(r);
        if (pos.size() != 6) throw std::logic_error("g2: expected 6 positive roots");
        std::vector<std::size_t> simple;
        for (auto r : pos) {
            bool is_sum = false;
            for (auto s : pos)
                for (auto t : pos) {
                    std::array<Scalar, 2> sum = {roots[s].first[0] + roots[t].first[0],
                                                 roots[s].first[1] + roots[t].first[1]};
                    if (sum == roots[r].first) is_sum = true;
                }
            if (!is_sum) simple.push_back(r);
        }
        if (simple.size() != 2) throw std::logic_error("g2: expected 2 simple roots");
        if (fval(roots[simple[0]].first) > fval(roots[simple[1]].first)) std::swap(simple[0], simple[1]);
        x1 = roots[simple[0]].second;
        x2 = roots[simple[1]].second;
        auto find_negative = [&](std::size_t r) -> const Derivation& {
            for (auto& cand_root : roots) {
                if (cand_root.first[0] == -roots[r].first[0] && cand_root.first[1] == -roots[r].first[1])
                    return cand_root.second;
            }
            throw std::logic_error("g2: missing negative root");
        };
        y1 = find_negative(simple[0]);
        y2 = find_negative(simple[1]);
    }
};

// Element of V7^{k1} (x) (wedge^2 V7)^{k2}, kept as a sparse sum of basis
// monomials.  Keys: k1 vector indices followed by k2 encoded pairs p*7+q, p<q.
struct G2Tensor {
    int k1 = 0, k2 = 0;
    std::map<std::vector<int>, Scalar> terms;

    static int enc(int p, int q) { return p * 7 + q; }

    void add_term(std::vector<int> key, Scalar coeff) {
        if (coeff.is_zero()) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(std::move(key), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }

    G2Tensor& operator+=(const G2Tensor& o) {
        for (const auto& [k, v] : o.terms) add_term(k, v);
        return *this;
    }
    friend G2Tensor operator*(const Scalar& s, const G2Tensor& t) {
        G2Tensor r;
        r.k1 = t.k1;
        r.k2 = t.k2;
        if (s.is_zero()) return r;
        for (const auto& [k, v] : t.terms) r.terms.emplace(k, s * v);
        return r;
    }
    friend bool operator==(const G2Tensor& a, const G2Tensor& b) {
        return a.k1 == b.k1 && a.k2 == b.k2 && a.terms == b.terms;
    }
};

// Derivation acting slot-wise on tensors (Leibniz rule).
inline G2Tensor act(const Derivation& d, const G2Tensor& t) {
    G2Tensor r;
    r.k1 = t.k1;
    r.k2 = t.k2;
    for (const auto& [key, coeff] : t.terms) {
        for (int s = 0; s < t.k1; ++s) {
            int b = key[s];
            for (int to = 0; to < 7; ++to) {
                const Scalar& m = d.m.at(to, b);
                if (m.is_zero()) continue;
                auto k2v = key;
                k2v[s] = to;
                r.add_term(std::move(k2v), coeff * m);
            }
        }
        for (int s = 0; s < t.k2; ++s) {
            int p = key[t.k1 + s] / 7, q = key[t.k1 + s] % 7;
            auto wedge_insert = [&](int np, int nq, const Scalar& cf) {
                if (np == nq) return;
                int sign = 1;
                if (np > nq) {
                    std::swap(np, nq);
                    sign = -1;
                }
                auto k2v = key;
                k2v[t.k1 + s] = G2Tensor::enc(np, nq);
                r.add_term(std::move(k2v), sign > 0 ? cf : -cf);
            };
            for (int to = 0; to < 7; ++to) {
                const Scalar& mp = d.m.at(to, p);
                if (!mp.is_zero()) wedge_insert(to, q, coeff * mp);
                const Scalar& mq = d.m.at(to, q);
                if (!mq.is_zero()) wedge_insert(p, to, coeff * mq);
            }
        }
    }
    return r;
}

// v(k1,k2) = e1^{k1} (x) (e1 ^ e3*)^{k2}
inline G2Tensor highest_weight_vector(int k1, int k2) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("highest_weight_vector: negative degree");
    G2Tensor t;
    t.k1 = k1;
    t.k2 = k2;
    std::vector<int> key(k1 + k2);
    for (int s = 0; s < k1; ++s) key[s] = 1;
    for (int s = 0; s < k2; ++s) key[k1 + s] = G2Tensor::enc(1, 6);
    t.terms.emplace(std::move(key), Scalar(1));
    return t;
}

// beta = u^{k1} (x) (u ^ v)^{k2} with the null pair u = e2, v = e3*.
inline G2Tensor null_pair_beta(int k1, int k2) {
    const auto& vb = V7Basis::get();
    const Octonion &u = vb.vec[2], &v = vb.vec[6];
    if (!(u * u).is_zero() || !(u * v).is_zero() || !(v * u).is_zero() || !(v * v).is_zero())
        throw std::logic_error("null_pair_beta: the chosen pair is not null");
    G2Tensor t;
    t.k1 = k1;
    t.k2 = k2;
    std::vector<int> key(k1 + k2);
    for (int s = 0; s < k1; ++s) key[s] = 2;
    for (int s = 0; s < k2; ++s) key[k1 + s] = G2Tensor::enc(2, 6);
    t.terms.emplace(std::move(key), Scalar(1));
    return t;
}

struct SpanningSet {
    std::vector<G2Tensor> tensors;
    std::size_t span_dim = 0;
};

inline std::size_t tensor_span_dim(const std::vector<G2Tensor>& ts) {
    std::map<std::vector<int>, std::size_t> colid;
    for (const auto& t : ts)
        for (const auto& [k, v] : t.terms) colid.emplace(k, colid.size());
    if (colid.empty()) return 0;
    Mat<Scalar> m(ts.size(), colid.size());
    for (std::size_t r = 0; r < ts.size(); ++r)
        for (const auto& [k, v] : ts[r].terms) m.at(r, colid[k]) = v;
    return rank(std::move(m));
}

namespace detail {

// Incremental row-echelon span tracker over the tensor monomial basis.
struct SpanTracker {
    // pivot monomial -> reduced row
    std::map<std::vector<int>, std::map<std::vector<int>, Scalar>> rows;

    // Reduces t against the tracked span; keeps it if independent.
    bool insert(const G2Tensor& t) {
        std::map<std::vector<int>, Scalar> cur(t.terms.begin(), t.terms.end());
        while (!cur.empty()) {
            auto lead = cur.begin();
            auto it = rows.find(lead->first);
            if (it == rows.end()) {
                Scalar inv = Scalar(1) / lead->second;
                for (auto& [k, v] : cur) v *= inv;
                rows.emplace(lead->first, std::move(cur));
                return true;
            }
            Scalar f = lead->second;
            for (const auto& [k, v] : it->second) {
                auto jt = cur.find(k);
                if (jt == cur.end()) {
                    cur.emplace(k, -(f * v));
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) cur.erase(jt);
                }
            }
        }
        return false;
    }
};

}  // namespace detail

// Spanning set of W(k1,k2) from lowering words in {y1, y2} applied to
// v(k1,k2), up to `bound` applications of each generator along any word.
// Sorted monomials y1^{m1} y2^{m2} alone do not exhaust the module (the
// lowering chains interleave), so the closure keeps every word value that
// grows the span.  The achieved span dimension is reported so callers can
// detect saturation.
inline SpanningSet spanning_set(int k1, int k2, int bound) {
    if (bound < 1) throw std::invalid_argument("spanning_set: bound must be >= 1");
    const auto& g2 = G2Structure::get();
    SpanningSet out;
    detail::SpanTracker tracker;
    struct Node {
        G2Tensor t;
        int m1, m2;
    };
    G2Tensor v = highest_weight_vector(k1, k2);
    tracker.insert(v);
    out.tensors.push_back(v);
    std::vector<Node> frontier{{std::move(v), 0, 0}};
    while (!frontier.empty()) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            for (int gen = 0; gen < 2; ++gen) {
                int m1 = node.m1 + (gen == 0), m2 = node.m2 + (gen == 1);
                if (m1 > bound || m2 > bound) continue;
                G2Tensor u = act(gen == 0 ? g2.y1 : g2.y2, node.t);
                if (u.is_zero() || !tracker.insert(u)) continue;
                out.tensors.push_back(u);
                next.push_back({std::move(u), m1, m2});
            }
        }
        frontier = std::move(next);
    }
    out.span_dim = tracker.rows.size();
    return out;
}

inline int default_spanning_bound(int k1, int k2) { return 6 * (k1 + 2 * k2) + 1; }

}  // namespace extheta
