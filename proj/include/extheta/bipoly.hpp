#pragma once

#include <map>

#include "extheta/g2.hpp"
#include "extheta/jordan.hpp"

namespace extheta {

// Bihomogeneous polynomial in (w1,w2,w3) and (z23,z31,z12), exponent-keyed.
// Monomial keys are ordered lexicographically on (w exponents, z exponents);
// that ordering is part of the serialization contract.
struct BiPolynomial {
    int degw = 0, degz = 0;
    std::map<std::array<int, 6>, Scalar> terms;

    static BiPolynomial constant(Scalar v, int dw = 0, int dz = 0) {
        BiPolynomial p;
        p.degw = dw;
        p.degz = dz;
        if (!v.is_zero()) p.terms.emplace(std::array<int, 6>{0, 0, 0, 0, 0, 0}, std::move(v));
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const std::array<int, 6>& key, const Scalar& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    BiPolynomial& operator+=(const BiPolynomial& o) {
        for (const auto& [k, v] : o.terms) add_term(k, v);
        return *this;
    }
    friend BiPolynomial operator*(const Scalar& s, const BiPolynomial& p) {
        BiPolynomial r;
        r.degw = p.degw;
        r.degz = p.degz;
        if (s.is_zero()) return r;
        for (const auto& [k, v] : p.terms) r.terms.emplace(k, s * v);
        return r;
    }
    friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) { return a.terms == b.terms; }

    // multiply by a linear form in the w variables (coeffs c[0..2])
    void mul_linear_w(const std::array<Scalar, 3>& c) {
        std::map<std::array<int, 6>, Scalar> next;
        for (const auto& [k, v] : terms)
            for (int i = 0; i < 3; ++i) {
                if (c[i].is_zero()) continue;
                auto nk = k;
                ++nk[i];
                auto it = next.find(nk);
                if (it == next.end())
                    next.emplace(nk, v * c[i]);
                else
                    it->second += v * c[i];
            }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        terms = std::move(next);
        ++degw;
    }
    void mul_linear_z(const std::array<Scalar, 3>& c) {
        std::map<std::array<int, 6>, Scalar> next;
        for (const auto& [k, v] : terms)
            for (int i = 0; i < 3; ++i) {
                if (c[i].is_zero()) continue;
                auto nk = k;
                ++nk[3 + i];
                auto it = next.find(nk);
                if (it == next.end())
                    next.emplace(nk, v * c[i]);
                else
                    it->second += v * c[i];
            }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        terms = std::move(next);
        ++degz;
    }
};

// {P_{k1,k2}(T), beta}: the off-diagonal trace-zero parts (x1,x2,x3) of T are
// paired against beta's V7 slots, w variables collecting the vector slots and
// z variables the wedge slots (z23, z31, z12 dual to w1, w2, w3).
inline BiPolynomial pluriharmonic_pair(const JordanElement& t, const G2Tensor& beta) {
    const auto& vb = V7Basis::get();
    // pm[i][b] = (x_i, basis_b); basis vectors are trace zero, so pairing
    // against the raw slot entries already ignores their trace parts.
    std::array<std::array<Scalar, 7>, 3> pm;
    for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 7; ++b) pm[i][b] = oct_pair(t.a[i], vb.vec[b]);

    static constexpr int cyc[3][2] = {{1, 2}, {2, 0}, {0, 1}};  // z23, z31, z12

    BiPolynomial out;
    out.degw = beta.k1;
    out.degz = beta.k2;
    for (const auto& [key, coeff] : beta.terms) {
        BiPolynomial term = BiPolynomial::constant(coeff);
        for (int s = 0; s < beta.k1; ++s) {
            std::array<Scalar, 3> lin;
            for (int i = 0; i < 3; ++i) lin[i] = pm[i][key[s]];
            term.mul_linear_w(lin);
        }
        for (int s = 0; s < beta.k2; ++s) {
            int p = key[beta.k1 + s] / 7, q = key[beta.k1 + s] % 7;
            std::array<Scalar, 3> lin;
            for (int zi = 0; zi < 3; ++zi) {
                int i = cyc[zi][0], j = cyc[zi][1];
                lin[zi] = pm[i][p] * pm[j][q] - pm[i][q] * pm[j][p];
            }
            term.mul_linear_z(lin);
        }
        out += term;
    }
    return out;
}

// Contraction sum_i d/dw_i d/dz_{i-complement}, dropping one degree in each
// variable group; w1 pairs with z23, w2 with z31, w3 with z12.
inline BiPolynomial contract_check(const BiPolynomial& p) {
    if (p.degw < 1 || p.degz < 1) throw std::invalid_argument("contract_check: degrees too small");
    BiPolynomial r;
    r.degw = p.degw - 1;
    r.degz = p.degz - 1;
    for (const auto& [k, v] : p.terms)
        for (int i = 0; i < 3; ++i) {
            if (k[i] == 0 || k[3 + i] == 0) continue;
            auto nk = k;
            --nk[i];
            --nk[3 + i];
            r.add_term(nk, Scalar(Rational(k[i] * k[3 + i])) * v);
        }
    return r;
}

}  // namespace extheta
