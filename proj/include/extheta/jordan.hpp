#pragma once

#include <array>
#include <optional>

#include "extheta/linalg.hpp"
#include "extheta/octonion.hpp"
#include "extheta/shells.hpp"

namespace extheta {

// Element of J = H_3(Theta), in the layout
//   [ c1   a3   a2* ]
//   [ a3*  c2   a1  ]
//   [ a2   a1*  c3  ]
// All operations are exact over the Gaussian rationals.
struct JordanElement {
    std::array<Scalar, 3> c{};
    std::array<Octonion, 3> a{};

    JordanElement() = default;

    static JordanElement identity() {
        JordanElement x;
        x.c = {Scalar(1), Scalar(1), Scalar(1)};
        return x;
    }
    static JordanElement diag(Scalar c1, Scalar c2, Scalar c3) {
        JordanElement x;
        x.c = {std::move(c1), std::move(c2), std::move(c3)};
        return x;
    }
    // e_{kk}, k in {0,1,2}
    static JordanElement e(int k) {
        JordanElement x;
        x.c[k] = Scalar(1);
        return x;
    }
    // element with a single off-diagonal slot
    static JordanElement slot(int k, Octonion v) {
        JordanElement x;
        x.a[k] = std::move(v);
        return x;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        for (const auto& o : a)
            if (!o.is_zero()) return false;
        return true;
    }

    JordanElement& operator+=(const JordanElement& o) {
        for (int k = 0; k < 3; ++k) {
            c[k] += o.c[k];
            a[k] += o.a[k];
        }
        return *this;
    }
    JordanElement& operator-=(const JordanElement& o) {
        for (int k = 0; k < 3; ++k) {
            c[k] -= o.c[k];
            a[k] -= o.a[k];
        }
        return *this;
    }
    JordanElement operator-() const {
        JordanElement r;
        for (int k = 0; k < 3; ++k) {
            r.c[k] = -c[k];
            r.a[k] = -a[k];
        }
        return r;
    }
    friend JordanElement operator+(JordanElement x, const JordanElement& y) { return x += y; }
    friend JordanElement operator-(JordanElement x, const JordanElement& y) { return x -= y; }
    friend JordanElement operator*(const Scalar& s, const JordanElement& x) {
        JordanElement r;
        for (int k = 0; k < 3; ++k) {
            r.c[k] = s * x.c[k];
            r.a[k] = s * x.a[k];
        }
        return r;
    }
    friend bool operator==(const JordanElement& x, const JordanElement& y) {
        return x.c == y.c && x.a == y.a;
    }

    Scalar trace() const { return c[0] + c[1] + c[2]; }

    // Cubic norm: c1 c2 c3 - sum_i c_i n(a_i) + tr((a1 a2) a3).
    Scalar norm() const {
        Scalar n = c[0] * c[1] * c[2];
        for (int k = 0; k < 3; ++k) n -= c[k] * a[k].norm();
        return n + ((a[0] * a[1]) * a[2]).trace();
    }

    // Adjoint #: diagonal (c2 c3 - n(a1), ...), slot i = conj(a_{i+1} a_{i+2}) - c_i a_i.
    JordanElement adjoint() const {
        JordanElement r;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            r.c[i] = c[j] * c[k] - a[i].norm();
            r.a[i] = (a[j] * a[k]).conj() - c[i] * a[i];
        }
        return r;
    }

    bool in_lattice() const {
        for (const auto& v : c)
            if (!v.is_integral()) return false;
        for (const auto& o : a)
            if (!in_coxeter_order(o)) return false;
        return true;
    }
};

// Symmetrized bilinear cross product X x Y = (X+Y)^# - X^# - Y^#, expanded.
inline JordanElement cross(const JordanElement& x, const JordanElement& y) {
    JordanElement r;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        r.c[i] = x.c[j] * y.c[k] + y.c[j] * x.c[k] - oct_pair(x.a[i], y.a[i]);
        r.a[i] = (x.a[j] * y.a[k]).conj() + (y.a[j] * x.a[k]).conj() - x.c[i] * y.a[i] - y.c[i] * x.a[i];
    }
    return r;
}

// Trace pairing (X,Y) = sum c_i c_i' + sum (a_i, a_i')_oct.
inline Scalar pair_trace(const JordanElement& x, const JordanElement& y) {
    Scalar s, dot;
    for (int k = 0; k < 3; ++k) {
        s.addmul(x.c[k], y.c[k]);
        for (int i = 0; i < 8; ++i) dot.addmul(x.a[k].cd[i], y.a[k].cd[i]);
    }
    s += dot;
    s += dot;
    return s;
}

// Symmetric trilinear form with (x,x,x) = 6 n(x).
inline Scalar trilinear(const JordanElement& x, const JordanElement& y, const JordanElement& z) {
    return pair_trace(cross(x, y), z);
}

inline bool rank_at_most_one(const JordanElement& x) { return x.adjoint().is_zero(); }

enum class PairingMode { I, E };

// Pairing tag: mode I is the trace pairing; mode E is
//   (u,v)_E = (E,E,u)(E,E,v)/4 - (E,u,v).
struct JordanPairingTag {
    PairingMode mode = PairingMode::I;
    std::optional<JordanElement> e;

    static JordanPairingTag I() { return {}; }
    static JordanPairingTag E(JordanElement em) {
        if (!(em.norm() == Scalar(1))) throw std::invalid_argument("pairing tag: n(E) must be 1");
        if (!em.in_lattice()) throw std::invalid_argument("pairing tag: E must lie in J_R");
        JordanPairingTag t;
        t.mode = PairingMode::E;
        t.e = std::move(em);
        return t;
    }
    bool is_identity_e() const { return mode == PairingMode::I || (e && *e == JordanElement::identity()); }
};

inline Scalar pair_tagged(const JordanElement& u, const JordanElement& v, const JordanPairingTag& tag) {
    if (tag.mode == PairingMode::I) return pair_trace(u, v);
    if (!tag.e) throw std::invalid_argument("pairing tag: mode E without E matrix");
    const JordanElement& e = *tag.e;
    Scalar quarter(Rational(1, 4));
    return quarter * trilinear(e, e, u) * trilinear(e, e, v) - trilinear(e, u, v);
}

// Phi_{gamma,x}(z) = -gamma x (x x z) + (gamma,z)x + (gamma,x)z, with gamma in
// J^vee identified with J by the trace pairing.
inline JordanElement phi_apply(const JordanElement& gamma, const JordanElement& x, const JordanElement& z) {
    JordanElement r = -cross(gamma, cross(x, z));
    r += pair_trace(gamma, z) * x;
    r += pair_trace(gamma, x) * z;
    return r;
}

// Z-basis of J_R: indices 0..2 diagonal, then slot s (0..2) x coxeter index b.
inline JordanElement jr_basis(int k) {
    if (k < 3) return JordanElement::e(k);
    int s = (k - 3) / 8, b = (k - 3) % 8;
    return JordanElement::slot(s, CoxeterBasis::get().vec[b]);
}

inline std::array<Scalar, 27> jr_coords(const JordanElement& x) {
    std::array<Scalar, 27> out;
    for (int k = 0; k < 3; ++k) out[k] = x.c[k];
    for (int s = 0; s < 3; ++s) {
        auto cox = to_coxeter(x.a[s]);
        for (int b = 0; b < 8; ++b) out[3 + 8 * s + b] = std::move(cox[b]);
    }
    return out;
}

// Largest d with d^{-1} T in J_R.
inline Integer content(const JordanElement& t) {
    if (t.is_zero()) throw std::invalid_argument("content: zero element");
    if (!t.in_lattice()) throw std::invalid_argument("content: element not in J_R");
    Integer g = 0;
    for (const auto& v : jr_coords(t)) {
        g = gcd_int(g, v.re.get_num());
        if (g == 1) break;
    }
    return g;
}

// Projection J -> H_3(Q): diagonal kept, off-diagonal entries replaced by
// half their octonion traces.
inline Mat<Scalar> project_h3_scalar(const JordanElement& t) {
    Mat<Scalar> m(3, 3);
    Scalar half(Rational(1, 2));
    for (int i = 0; i < 3; ++i) m.at(i, i) = t.c[i];
    m.at(1, 2) = m.at(2, 1) = half * t.a[0].trace();
    m.at(0, 2) = m.at(2, 0) = half * t.a[1].trace();
    m.at(0, 1) = m.at(1, 0) = half * t.a[2].trace();
    return m;
}

inline Mat<Rational> project_h3q(const JordanElement& t) {
    auto s = project_h3_scalar(t);
    Mat<Rational> m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!s.at(i, j).is_rational()) throw std::invalid_argument("project_h3q: non-rational entry");
            m.at(i, j) = s.at(i, j).re;
        }
    return m;
}

// Levi action of n in GL_3: H_3(Q)-part X0 -> n^{-T} X0 n^{-1}, octonion
// vector part v -> det(n)^{-1} n v.  Scales the cubic norm by det(n)^{-2}.
inline JordanElement sp6_levi_act(const Mat<Rational>& n, const JordanElement& x) {
    if (n.rows != 3 || n.cols != 3) throw std::invalid_argument("sp6_levi_act: need 3x3 matrix");
    Mat<Rational> ninv = inverse(n);  // throws on singular n
    Rational det = n.at(0, 0) * (n.at(1, 1) * n.at(2, 2) - n.at(1, 2) * n.at(2, 1)) -
                   n.at(0, 1) * (n.at(1, 0) * n.at(2, 2) - n.at(1, 2) * n.at(2, 0)) +
                   n.at(0, 2) * (n.at(1, 0) * n.at(2, 1) - n.at(1, 1) * n.at(2, 0));
    auto x0 = project_h3_scalar(x);
    std::array<Octonion, 3> v;
    for (int k = 0; k < 3; ++k) v[k] = trace_zero_part(x.a[k]);

    // tn^{-1} X0 n^{-1}
    Mat<Scalar> m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Scalar acc;
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q) {
                    if (ninv.at(p, i) == 0 || ninv.at(q, j) == 0) continue;
                    acc += Scalar(ninv.at(p, i) * ninv.at(q, j)) * x0.at(p, q);
                }
            m.at(i, j) = std::move(acc);
        }
    std::array<Octonion, 3> w;
    Scalar dinv(Rational(1) / det);
    for (int i = 0; i < 3; ++i) {
        Octonion acc;
        for (int j = 0; j < 3; ++j) {
            if (n.at(i, j) == 0) continue;
            acc += Scalar(n.at(i, j)) * v[j];
        }
        w[i] = dinv * acc;
    }
    JordanElement r;
    for (int i = 0; i < 3; ++i) r.c[i] = m.at(i, i);
    r.a[0] = Octonion(m.at(1, 2)) + w[0];
    r.a[1] = Octonion(m.at(0, 2)) + w[1];
    r.a[2] = Octonion(m.at(0, 1)) + w[2];
    return r;
}

// Jordan product X o Y = (XY + YX)/2 via honest octonion matrix arithmetic.
inline JordanElement jordan_mul(const JordanElement& x, const JordanElement& y) {
    auto full = [](const JordanElement& t) {
        std::array<std::array<Octonion, 3>, 3> f;
        f[0][0] = Octonion(t.c[0]);
        f[1][1] = Octonion(t.c[1]);
        f[2][2] = Octonion(t.c[2]);
        f[0][1] = t.a[2];
        f[1][0] = t.a[2].conj();
        f[0][2] = t.a[1].conj();
        f[2][0] = t.a[1];
        f[1][2] = t.a[0];
        f[2][1] = t.a[0].conj();
        return f;
    };
    auto fx = full(x), fy = full(y);
    std::array<std::array<Octonion, 3>, 3> p;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Octonion acc;
            for (int k = 0; k < 3; ++k) {
                acc += fx[i][k] * fy[k][j];
                acc += fy[i][k] * fx[k][j];
            }
            p[i][j] = Scalar(Rational(1, 2)) * acc;
        }
    JordanElement r;
    for (int i = 0; i < 3; ++i) r.c[i] = p[i][i].cd[0];
    r.a[0] = p[1][2];
    r.a[1] = p[2][0];
    r.a[2] = p[0][1];
    return r;
}

}  // namespace extheta
