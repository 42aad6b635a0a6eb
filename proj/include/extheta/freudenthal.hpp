#pragma once

#include "extheta/jordan.hpp"

namespace extheta {

// Element (a, b, c, d) of W_J = Q + J + J^vee + Q, with J^vee identified with
// J by the trace pairing.
struct FreudenthalElement {
    Scalar a;
    JordanElement b;
    JordanElement c;
    Scalar d;

    FreudenthalElement() = default;
    FreudenthalElement(Scalar a_, JordanElement b_, JordanElement c_, Scalar d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    bool is_zero() const { return a.is_zero() && d.is_zero() && b.is_zero() && c.is_zero(); }
    bool in_lattice() const { return a.is_integral() && d.is_integral() && b.in_lattice() && c.in_lattice(); }

    FreudenthalElement& operator+=(const FreudenthalElement& o) {
        a += o.a;
        b += o.b;
        c += o.c;
        d += o.d;
        return *this;
    }
    friend FreudenthalElement operator+(FreudenthalElement x, const FreudenthalElement& y) { return x += y; }
    friend FreudenthalElement operator*(const Scalar& s, const FreudenthalElement& w) {
        return FreudenthalElement(s * w.a, s * w.b, s * w.c, s * w.d);
    }
    friend bool operator==(const FreudenthalElement& x, const FreudenthalElement& y) {
        return x.a == y.a && x.d == y.d && x.b == y.b && x.c == y.c;
    }

    // The order-2 Weyl element action (a,b,c,d) -> (d,-c,b,-a).
    FreudenthalElement flip() const { return FreudenthalElement(d, -c, b, -a); }

    static FreudenthalElement r1(const JordanElement& z) {
        return FreudenthalElement(Scalar(1), z, z.adjoint(), z.norm());
    }
};

// <(a,b,c,d),(a',b',c',d')> = a d' - d a' - (b,c') + (c,b').
// The convention is validated by invariance under the generator actions.
inline Scalar symplectic(const FreudenthalElement& w, const FreudenthalElement& v) {
    return w.a * v.d - w.d * v.a - pair_trace(w.b, v.c) + pair_trace(w.c, v.b);
}

// q(w) = (ad - (b,c))^2 + 4 a n(c) + 4 d n(b) - 4 (b^#, c^#); vanishes
// exactly on the closure of the rank-one orbit.
inline Scalar quartic(const FreudenthalElement& w) {
    Scalar t = w.a * w.d - pair_trace(w.b, w.c);
    Scalar four(4);
    return t * t + four * (w.a * w.c.norm() + w.d * w.b.norm() - pair_trace(w.b.adjoint(), w.c.adjoint()));
}

// exp n_L(X) with n_L(X)(a,b,c,d) = (0, aX, b x X, (c,X)); cubic truncation is exact.
inline FreudenthalElement n_g(const JordanElement& x, const FreudenthalElement& w) {
    FreudenthalElement r = w;
    r.b += w.a * x;
    JordanElement xsharp = x.adjoint();
    r.c += cross(w.b, x) + w.a * xsharp;
    r.d += pair_trace(w.c, x) + pair_trace(w.b, xsharp) + w.a * x.norm();
    return r;
}

// exp n_L^vee(gamma) with n_L^vee(gamma)(a,b,c,d) = ((b,gamma), c x gamma, d gamma, 0).
inline FreudenthalElement n_g_dual(const JordanElement& g, const FreudenthalElement& w) {
    FreudenthalElement r = w;
    JordanElement gsharp = g.adjoint();
    r.a += pair_trace(w.b, g) + pair_trace(w.c, gsharp) + w.d * g.norm();
    r.b += cross(w.c, g) + w.d * gsharp;
    r.c += w.d * g;
    return r;
}

// Whether Phi_{gamma,x} vanishes identically on J.
inline bool phi_is_zero(const JordanElement& gamma, const JordanElement& x) {
    for (int k = 0; k < 27; ++k)
        if (!phi_apply(gamma, x, jr_basis(k)).is_zero()) return false;
    return true;
}

// Unified rank <= 1 predicate over the three branches of the minimal orbit.
inline bool rank_at_most_one_w(const FreudenthalElement& w) {
    if (w.is_zero()) return true;
    if (!w.a.is_zero()) {
        Scalar ainv = Scalar(1) / w.a;
        if (!(w.c == ainv * w.b.adjoint())) return false;
        return w.d == ainv * ainv * w.b.norm();
    }
    if (!w.d.is_zero()) {
        Scalar dinv = Scalar(1) / w.d;
        if (!(w.b == dinv * w.c.adjoint())) return false;
        return w.c.norm().is_zero();
    }
    if (!w.b.adjoint().is_zero() || !w.c.adjoint().is_zero()) return false;
    return phi_is_zero(w.c, w.b);
}

inline Integer content_w(const FreudenthalElement& w) {
    if (w.is_zero()) throw std::invalid_argument("content_w: zero element");
    if (!w.in_lattice()) throw std::invalid_argument("content_w: element not in W_{J_R}");
    Integer g = gcd_int(w.a.re.get_num(), w.d.re.get_num());
    for (const auto& v : jr_coords(w.b)) {
        g = gcd_int(g, v.re.get_num());
        if (g == 1) return g;
    }
    for (const auto& v : jr_coords(w.c)) {
        g = gcd_int(g, v.re.get_num());
        if (g == 1) return g;
    }
    return g;
}

// Kim's Fourier coefficient a(T) = 240 sigma_3(d_T) for rank-one T; a(0) = 1.
inline Integer kim_coeff(const JordanElement& t) {
    if (t.is_zero()) return 1;
    if (!rank_at_most_one(t)) throw std::invalid_argument("kim_coeff: rank > 1");
    return 240 * sigma_k(content(t), 3);
}

// Gan's coefficient a(w) = sigma_4(d_w) for rank-one w.
inline Integer gan_coeff(const FreudenthalElement& w) {
    if (!rank_at_most_one_w(w) || w.is_zero()) throw std::invalid_argument("gan_coeff: need rank one");
    return sigma_k(content_w(w), 4);
}

// Binary cubic A u^3 + B u^2 v + C u v^2 + D v^3.
struct BinaryCubic {
    Rational coeff[4];

    BinaryCubic() = default;
    BinaryCubic(Rational a, Rational b, Rational c, Rational d) : coeff{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    friend bool operator==(const BinaryCubic& x, const BinaryCubic& y) {
        for (int k = 0; k < 4; ++k)
            if (x.coeff[k] != y.coeff[k]) return false;
        return true;
    }
};

// p_tag(w)(u,v) = a u^3 + (b,E^#) u^2 v + (c,E) u v^2 + d v^3, with E = I in mode I.
inline BinaryCubic project_cubic(const FreudenthalElement& w, const JordanPairingTag& tag) {
    Scalar bcoef, ccoef;
    if (tag.mode == PairingMode::I) {
        bcoef = w.b.trace();
        ccoef = w.c.trace();
    } else {
        if (!tag.e) throw std::invalid_argument("project_cubic: mode E without E matrix");
        bcoef = pair_trace(w.b, tag.e->adjoint());
        ccoef = pair_trace(w.c, *tag.e);
    }
    if (!(w.a.is_rational() && w.d.is_rational() && bcoef.is_rational() && ccoef.is_rational()))
        throw std::invalid_argument("project_cubic: non-rational cubic");
    return BinaryCubic(w.a.re, bcoef.re, ccoef.re, w.d.re);
}

}  // namespace extheta
