#pragma once

#include <utility>
#include <vector>

#include "extheta/freudenthal.hpp"
#include "extheta/g2.hpp"
#include "extheta/jordan.hpp"

namespace extheta {

// Phi_{gamma,x} as an exact 27x27 matrix in J_R coordinates.
struct PhiOperator {
    Mat<Scalar> m;

    PhiOperator() : m(27, 27) {}

    bool is_zero() const {
        for (const auto& v : m.data)
            if (!v.is_zero()) return false;
        return true;
    }
    friend PhiOperator operator-(const PhiOperator& a, const PhiOperator& b) {
        PhiOperator r;
        for (std::size_t k = 0; k < a.m.data.size(); ++k) r.m.data[k] = a.m.data[k] - b.m.data[k];
        return r;
    }
    friend bool operator==(const PhiOperator& a, const PhiOperator& b) { return a.m.data == b.m.data; }
};

inline PhiOperator phi(const JordanElement& gamma, const JordanElement& x) {
    PhiOperator op;
    for (int col = 0; col < 27; ++col) {
        auto img = jr_coords(phi_apply(gamma, x, jr_basis(col)));
        for (int row = 0; row < 27; ++row) op.m.at(row, col) = std::move(img[row]);
    }
    return op;
}

// Basis of the trace-zero subspace J^0 (dimension 26).
inline JordanElement j0_basis(int k) {
    if (k == 0) return JordanElement::e(0) - JordanElement::e(1);
    if (k == 1) return JordanElement::e(1) - JordanElement::e(2);
    return jr_basis(k + 1);  // the 24 off-diagonal lattice vectors
}

// Matrix of wedge^2 J^0 -> End(J), X ^ Y -> Phi_{i(X),Y} - Phi_{i(Y),X},
// with rows indexed by the C(26,2) = 325 basis wedges and columns by the
// 27 x 27 operator entries.  Its rank is dim f_4 = 52 and its kernel is the
// 273-dimensional representation V_{lambda_3}.
inline Mat<Rational> phi_wedge_matrix() {
    std::vector<JordanElement> basis;
    for (int k = 0; k < 26; ++k) basis.push_back(j0_basis(k));
    Mat<Rational> m(325, 729);
    int row = 0;
    for (int i = 0; i < 26; ++i)
        for (int j = i + 1; j < 26; ++j, ++row) {
            PhiOperator op = phi(basis[i], basis[j]) - phi(basis[j], basis[i]);
            for (int e = 0; e < 729; ++e) {
                const Scalar& v = op.m.data[e];
                if (v.is_zero()) continue;
                if (!v.is_rational()) throw std::logic_error("phi_wedge_matrix: non-rational entry");
                m.at(row, e) = v.re;
            }
        }
    return m;
}

// The singular isotropic pair of matrices x, y = z x x built from octonion
// data (a2, a3, a2') with n(a2) = 0, a2 != 0, n(a3) = -1, n(a2') = 1 and
// (a2', a2) = 1.  The constructed pair satisfies the full checklist:
// (x,x) = (x,y) = (y,y) = 0, both rank <= 1, x x y = 0, and the four
// operators Phi_{i(x),x}, Phi_{i(x),y}, Phi_{i(y),x}, Phi_{i(y),y} vanish.
struct SingularPair {
    JordanElement x, y;
};

inline SingularPair singular_pair(const Octonion& a2, const Octonion& a3, const Octonion& a2p) {
    if (a2.is_zero() || !a2.norm().is_zero()) throw std::invalid_argument("singular_pair: need n(a2)=0, a2!=0");
    if (!(a3.norm() == Scalar(-1))) throw std::invalid_argument("singular_pair: need n(a3)=-1");
    if (!(a2p.norm() == Scalar(1))) throw std::invalid_argument("singular_pair: need n(a2')=1");
    if (!(oct_pair(a2p, a2) == Scalar(1))) throw std::invalid_argument("singular_pair: need (a2',a2)=1");

    JordanElement x;
    x.c = {Scalar(1), Scalar(-1), Scalar(0)};
    x.a[0] = a3.conj() * a2.conj();
    x.a[1] = a2;
    x.a[2] = a3;
    JordanElement z;
    z.c[1] = Scalar(1);
    z.a[1] = a2p;
    JordanElement y = cross(z, x);

    if (!pair_trace(x, x).is_zero() || !pair_trace(x, y).is_zero() || !pair_trace(y, y).is_zero())
        throw std::logic_error("singular_pair: isotropy check failed");
    if (!rank_at_most_one(x) || !rank_at_most_one(y) || !cross(x, y).is_zero())
        throw std::logic_error("singular_pair: rank check failed");
    if (!phi_is_zero(x, x) || !phi_is_zero(x, y) || !phi_is_zero(y, x) || !phi_is_zero(y, y))
        throw std::logic_error("singular_pair: Phi check failed");
    return {std::move(x), std::move(y)};
}

// The specific pair of the Delta_{G2} computation: a2 = e2, a3 = u0,
// a2' = e2 - e2*.
inline const SingularPair& delta_singular_pair();

// Entrywise action of a derivation of Theta on J: diagonal killed, each
// off-diagonal slot mapped through the derivation.  This is the g2 subalgebra
// of f4 acting on J.
inline JordanElement derivation_on_jordan(const Derivation& d, const JordanElement& t) {
    JordanElement r;
    for (int k = 0; k < 3; ++k) r.a[k] = d.apply_oct(trace_zero_part(t.a[k]));
    return r;
}

// exp(D) on J for a nilpotent derivation action (exact; throws if the action
// fails to nilpotate within dim J steps).
inline JordanElement exp_derivation_on_jordan(const Derivation& d, const JordanElement& t) {
    JordanElement acc = t, term = t;
    Rational fact(1);
    for (int k = 1; k <= 28; ++k) {
        term = derivation_on_jordan(d, term);
        if (term.is_zero()) return acc;
        fact /= k;
        acc += Scalar(fact) * term;
    }
    throw std::invalid_argument("exp_derivation_on_jordan: action is not nilpotent");
}

// Element of (wedge^2 J)^{(x) m} as a term list.
struct WedgeTensor {
    int degree = 0;
    struct Term {
        Scalar coeff;
        std::vector<std::pair<JordanElement, JordanElement>> factors;
    };
    std::vector<Term> terms;

    static WedgeTensor power(const JordanElement& b, const JordanElement& c, int m) {
        WedgeTensor t;
        t.degree = m;
        Term term;
        term.coeff = Scalar(1);
        term.factors.assign(m, {b, c});
        t.terms.push_back(std::move(term));
        return t;
    }
};

// beta_{K,m} = (x ^ y)^{(x) m} for a checked singular pair.
inline WedgeTensor beta_km(int m, const SingularPair& pair) {
    if (m < 0) throw std::invalid_argument("beta_km: negative degree");
    return WedgeTensor::power(pair.x, pair.y, m);
}

// <x ^ y, b ^ c>_tag = (x,b)_tag (y,c) - (x,c)_tag (y,b); the first slot of
// each product carries the tagged pairing, the second the trace pairing.
inline Scalar wedge_factor_pair(const JordanElement& b, const JordanElement& c, const JordanElement& bp,
                                const JordanElement& cp, const JordanPairingTag& tag) {
    return pair_tagged(b, bp, tag) * pair_trace(c, cp) - pair_tagged(b, cp, tag) * pair_trace(c, bp);
}

inline Scalar wedge_pair(const WedgeTensor& p, const WedgeTensor& beta, const JordanPairingTag& tag) {
    if (p.degree != beta.degree) throw std::invalid_argument("wedge_pair: degree mismatch");
    Scalar total;
    for (const auto& tp : p.terms)
        for (const auto& tb : beta.terms) {
            Scalar prod = tp.coeff * tb.coeff;
            for (int j = 0; j < p.degree && !prod.is_zero(); ++j)
                prod *= wedge_factor_pair(tp.factors[j].first, tp.factors[j].second, tb.factors[j].first,
                                          tb.factors[j].second, tag);
            total += prod;
        }
    return total;
}

inline const SingularPair& delta_singular_pair() {
    static const SingularPair p = [] {
        const auto& vb = V7Basis::get();
        return singular_pair(vb.vec[2], vb.vec[0], vb.vec[2] - vb.vec[5]);
    }();
    return p;
}

}  // namespace extheta
