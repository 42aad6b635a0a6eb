#pragma once

#include <array>
#include <cstdint>

#include "extheta/linalg.hpp"
#include "extheta/quaternion.hpp"
#include "extheta/scalar.hpp"

namespace extheta {

// Octonions as Cayley-Dickson pairs of quaternions with gamma = -1, stored on
// the basis (1,i,j,k,(0,1),(0,i),(0,j),(0,k)).  Multiplication is table
// driven; the table is generated once from the doubling rule
//   (x1,y1)(x2,y2) = (x1 x2 + gamma y2* y1, y2 x1 + y1 x2*).
struct OctMulTable {
    int idx[8][8];
    int sgn[8][8];

    OctMulTable() {
        for (int p = 0; p < 8; ++p)
            for (int q = 0; q < 8; ++q) {
                Quaternion x1, y1, x2, y2;
                (p < 4 ? x1 : y1) = Quaternion::basis(p & 3);
                (q < 4 ? x2 : y2) = Quaternion::basis(q & 3);
                Quaternion first = x1 * x2 - y2.conj() * y1;
                Quaternion second = y2 * x1 + y1 * x2.conj();
                idx[p][q] = -1;
                sgn[p][q] = 0;
                for (int k = 0; k < 4; ++k) {
                    if (!first.c[k].is_zero()) {
                        idx[p][q] = k;
                        sgn[p][q] = first.c[k].re > 0 ? 1 : -1;
                    }
                    if (!second.c[k].is_zero()) {
                        idx[p][q] = 4 + k;
                        sgn[p][q] = second.c[k].re > 0 ? 1 : -1;
                    }
                }
            }
    }
    static const OctMulTable& get() {
        static const OctMulTable t;
        return t;
    }
};

struct Octonion {
    std::array<Scalar, 8> cd{};

    Octonion() = default;
    explicit Octonion(long v) { cd[0] = Scalar(v); }
    explicit Octonion(const Scalar& v) { cd[0] = v; }
    Octonion(Quaternion x, Quaternion y) {
        for (int k = 0; k < 4; ++k) {
            cd[k] = std::move(x.c[k]);
            cd[4 + k] = std::move(y.c[k]);
        }
    }

    static Octonion cd_basis(int k) {
        Octonion o;
        o.cd[k] = Scalar(1);
        return o;
    }

    bool is_zero() const {
        for (const auto& v : cd)
            if (!v.is_zero()) return false;
        return true;
    }

    Octonion conj() const {
        Octonion o;
        o.cd[0] = cd[0];
        for (int k = 1; k < 8; ++k) o.cd[k] = -cd[k];
        return o;
    }
    Scalar trace() const { return cd[0] + cd[0]; }
    Scalar norm() const {
        Scalar n;
        for (const auto& v : cd) n += v * v;
        return n;
    }

    Octonion& operator+=(const Octonion& o) {
        for (int k = 0; k < 8; ++k) cd[k] += o.cd[k];
        return *this;
    }
    Octonion& operator-=(const Octonion& o) {
        for (int k = 0; k < 8; ++k) cd[k] -= o.cd[k];
        return *this;
    }
    Octonion operator-() const {
        Octonion r;
        for (int k = 0; k < 8; ++k) r.cd[k] = -cd[k];
        return r;
    }
    friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
    friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
    friend Octonion operator*(const Scalar& s, const Octonion& o) {
        Octonion r;
        for (int k = 0; k < 8; ++k)
            if (!o.cd[k].is_zero()) r.cd[k] = s * o.cd[k];
        return r;
    }
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.cd == b.cd; }

    friend Octonion operator*(const Octonion& a, const Octonion& b) {
        const auto& t = OctMulTable::get();
        Octonion r;
        for (int p = 0; p < 8; ++p) {
            if (a.cd[p].is_zero()) continue;
            for (int q = 0; q < 8; ++q) {
                if (b.cd[q].is_zero()) continue;
                Scalar v = a.cd[p] * b.cd[q];
                if (t.sgn[p][q] < 0)
                    r.cd[t.idx[p][q]] -= v;
                else
                    r.cd[t.idx[p][q]] += v;
            }
        }
        return r;
    }
};

// Symmetric bilinear form (x,y) = n(x+y) - n(x) - n(y) = 2 * (coordinate dot).
inline Scalar oct_pair(const Octonion& a, const Octonion& b) {
    Scalar s;
    for (int k = 0; k < 8; ++k) s.addmul(a.cd[k], b.cd[k]);
    s += s;
    return s;
}

inline Octonion trace_zero_part(const Octonion& x) {
    Octonion r = x;
    r.cd[0] = Scalar(0);
    return r;
}

// Coxeter's integral basis (jh, e, -h, j, ih, 1, eh, ke) with e = (0,1) and
// h = (i+j+k+e)/2, derived here by octonion arithmetic.  Its Gram matrix under
// (x,y) is an E8 Cartan matrix; integrality in this basis defines R_Theta.
struct CoxeterBasis {
    std::array<Octonion, 8> vec;
    Mat<Rational> cox_to_cd;  // columns are the basis vectors
    Mat<Rational> cd_to_cox;
    Mat<Integer> gram;
    std::array<std::array<int, 8>, 8> two_cd;  // 2 * CD coords, integral

    CoxeterBasis() {
        Octonion one = Octonion::cd_basis(0), i = Octonion::cd_basis(1), j = Octonion::cd_basis(2),
                 k = Octonion::cd_basis(3), e = Octonion::cd_basis(4);
        Scalar half(Rational(1, 2));
        Octonion h = half * (i + j + k + e);
        vec = {j * h, e, -h, j, i * h, one, e * h, k * e};
        cox_to_cd = Mat<Rational>(8, 8);
        for (int c = 0; c < 8; ++c)
            for (int r = 0; r < 8; ++r) cox_to_cd.at(r, c) = vec[c].cd[r].re;
        cd_to_cox = inverse(cox_to_cd);
        gram = Mat<Integer>(8, 8);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                Rational p = oct_pair(vec[r], vec[c]).re;
                gram.at(r, c) = p.get_num();  // entries are integers
            }
        for (int c = 0; c < 8; ++c)
            for (int r = 0; r < 8; ++r) {
                Rational t = 2 * vec[c].cd[r].re;
                two_cd[c][r] = static_cast<int>(t.get_num().get_si());
            }
    }
    static const CoxeterBasis& get() {
        static const CoxeterBasis b;
        return b;
    }
};

inline Octonion from_coxeter(const std::array<Scalar, 8>& coords) {
    const auto& cb = CoxeterBasis::get();
    Octonion r;
    for (int c = 0; c < 8; ++c) {
        if (coords[c].is_zero()) continue;
        for (int k = 0; k < 8; ++k) {
            if (cb.cox_to_cd.at(k, c) == 0) continue;
            r.cd[k] += coords[c] * Scalar(cb.cox_to_cd.at(k, c));
        }
    }
    return r;
}

template <typename IntLike>
inline Octonion from_coxeter_ints(const IntLike& coords) {
    std::array<Scalar, 8> s;
    for (int k = 0; k < 8; ++k) s[k] = Scalar(Rational(static_cast<long>(coords[k])));
    return from_coxeter(s);
}

inline std::array<Scalar, 8> to_coxeter(const Octonion& x) {
    const auto& cb = CoxeterBasis::get();
    std::array<Scalar, 8> out;
    for (int r = 0; r < 8; ++r) {
        Scalar acc;
        for (int k = 0; k < 8; ++k) {
            if (cb.cd_to_cox.at(r, k) == 0 || x.cd[k].is_zero()) continue;
            acc += Scalar(cb.cd_to_cox.at(r, k)) * x.cd[k];
        }
        out[r] = std::move(acc);
    }
    return out;
}

// Membership in Coxeter's order: all coxeter coordinates integral.
inline bool in_coxeter_order(const Octonion& x) {
    for (const auto& c : to_coxeter(x))
        if (!c.is_integral()) return false;
    return true;
}

}  // namespace extheta
