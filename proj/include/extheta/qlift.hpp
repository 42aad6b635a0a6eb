#pragma once

#include <optional>

#include "extheta/f4.hpp"
#include "extheta/fiber.hpp"
#include "extheta/parallel.hpp"
#include "extheta/qseries.hpp"

namespace extheta {

// Fourier-coefficient index: a cubic ring presented through its binary cubic.
struct CubicRingSpec {
    enum class Kind { Product3, ZCrossQuadratic };
    Kind kind = Kind::Product3;
    long disc = 1;

    static CubicRingSpec product3() { return {}; }
    static CubicRingSpec z_cross_quadratic(long d) {
        long r = ((d % 4) + 4) % 4;
        if (d <= 0 || (r != 0 && r != 1))
            throw std::invalid_argument("CubicRingSpec: need D > 0 with D = 0,1 mod 4");
        CubicRingSpec s;
        s.kind = Kind::ZCrossQuadratic;
        s.disc = d;
        return s;
    }

    // Dictionary form of the ring Z x Z[t]/(t^2 - pt - q): -y(x^2 + pxy + qy^2),
    // with (p,q) = (D, (D-D^2)/4).
    BinaryCubic ring_cubic() const {
        if (kind == Kind::Product3) return BinaryCubic(0, 1, -1, 0);
        Rational q(disc - disc * disc, 4);
        q.canonicalize();
        return BinaryCubic(0, -1, Rational(-disc), -q);
    }
    // The cubic actually carried by the enumerated lattice elements
    // (0, T1, T2, q) with tr(T1) = -1, tr(T2) = p: -u^2 v + p u v^2 + q v^3.
    BinaryCubic fiber_cubic() const {
        if (kind == Kind::Product3) return BinaryCubic(0, 1, -1, 0);
        Rational q(disc - disc * disc, 4);
        q.canonicalize();
        return BinaryCubic(0, -1, Rational(disc), q);
    }
};

// Unnormalized quaternionic Fourier coefficient
//   sum over the rank-one fiber of a(w) <P_m(w), beta>_tag,
// with P_m(w) = (b ^ c)^{(x) m} for w = (a,b,c,d).
inline Scalar g2_fc(const BinaryCubic& w0, const WedgeTensor& beta, const JordanPairingTag& tag) {
    // A term whose factors all coincide contributes a single pairing power.
    std::vector<bool> uniform(beta.terms.size(), true);
    for (std::size_t t = 0; t < beta.terms.size(); ++t)
        for (std::size_t j = 1; j < beta.terms[t].factors.size(); ++j)
            if (!(beta.terms[t].factors[j] == beta.terms[t].factors[0])) {
                uniform[t] = false;
                break;
            }
    Scalar total;
    fiber_rank_one_stream(w0, tag, [&](const FreudenthalElement& w, long content) {
        Scalar contrib;
        for (std::size_t t = 0; t < beta.terms.size(); ++t) {
            const auto& term = beta.terms[t];
            if (static_cast<int>(term.factors.size()) != beta.degree)
                throw std::invalid_argument("g2_fc: malformed beta term");
            Scalar prod = term.coeff;
            if (uniform[t] && beta.degree > 0) {
                Scalar f = wedge_factor_pair(w.b, w.c, term.factors[0].first, term.factors[0].second, tag);
                for (int j = 0; j < beta.degree && !prod.is_zero(); ++j) prod *= f;
            } else {
                for (int j = 0; j < beta.degree && !prod.is_zero(); ++j)
                    prod *= wedge_factor_pair(w.b, w.c, term.factors[j].first, term.factors[j].second, tag);
            }
            contrib += prod;
        }
        if (contrib.is_zero()) return;
        if (content == 1) {
            total += contrib;
        } else {
            total += Scalar(Rational(sigma_k(Integer(content), 4))) * contrib;
        }
    });
    return total;
}

// a_{Delta_G2}(Z x Z_D), through both computations: (A) the Freudenthal fiber
// machinery with m = 2 and the singular-pair beta, (B) the direct (v,x)
// lattice sum of the harmonic theta series.  The two must agree exactly.
inline Scalar delta_route_a(long d) {
    auto ring = CubicRingSpec::z_cross_quadratic(d);
    return g2_fc(ring.fiber_cubic(), beta_km(2, delta_singular_pair()), JordanPairingTag::I());
}

inline Scalar delta_route_b(long d) {
    CubicRingSpec::z_cross_quadratic(d);  // validates d
    return Scalar(harmonic_theta(static_cast<int>(d)).coeff(static_cast<int>(d)));
}

struct DeltaValue {
    Scalar raw;
    Rational normalized;  // raw / raw(Z x Z x Z)
};

inline DeltaValue delta_g2_coefficient(long d) {
    Scalar a = delta_route_a(d);
    Scalar b = delta_route_b(d);
    if (!(a == b)) throw std::logic_error("delta_g2_coefficient: fiber machinery disagrees with lattice sum");
    Scalar unit = delta_route_a(1);
    if (!a.is_rational() || !unit.is_rational() || unit.is_zero())
        throw std::logic_error("delta_g2_coefficient: unexpected normalization");
    return {a, a.re / unit.re};
}

struct DeltaRow {
    long d;
    Scalar raw;
    Rational normalized;
    bool routes_agree;
};

// Normalized alpha(D) for all D <= dmax, D = 0,1 mod 4, with the harmonic
// theta series computed once and compared against every route-A value.
// Rows are stored per discriminant, so the result does not depend on the
// thread count.
inline std::vector<DeltaRow> delta_table(long dmax, unsigned threads = 1) {
    QSeries theta = harmonic_theta(static_cast<int>(dmax));
    Scalar unit = delta_route_a(1);
    std::vector<long> ds;
    for (long d = 1; d <= dmax; ++d)
        if (d % 4 == 0 || d % 4 == 1) ds.push_back(d);
    std::vector<DeltaRow> rows(ds.size());
    parallel_for(ds.size(), threads, [&](std::size_t i) {
        long d = ds[i];
        Scalar raw = delta_route_a(d);
        bool agree = raw.is_rational() && raw.re == theta.coeff(static_cast<int>(d));
        rows[i] = {d, raw, raw.re / unit.re, agree};
    });
    return rows;
}

// Externally supplied Elkies-Gross style data: a norm-one E in J_R and,
// optionally, the rational matrix of delta_E on J_R coordinates.
struct EData {
    JordanElement e;
    std::optional<Mat<Rational>> delta;
};

inline JordanElement apply_jr_matrix(const Mat<Rational>& m, const JordanElement& x) {
    if (m.rows != 27 || m.cols != 27) throw std::invalid_argument("apply_jr_matrix: need 27x27");
    auto coords = jr_coords(x);
    std::array<Scalar, 27> out;
    for (int r = 0; r < 27; ++r) {
        Scalar acc;
        for (int c = 0; c < 27; ++c) {
            if (m.at(r, c) == 0 || coords[c].is_zero()) continue;
            acc += Scalar(m.at(r, c)) * coords[c];
        }
        out[r] = std::move(acc);
    }
    JordanElement y;
    for (int k = 0; k < 3; ++k) y.c[k] = out[k];
    for (int s = 0; s < 3; ++s) {
        std::array<Scalar, 8> cox;
        for (int b = 0; b < 8; ++b) cox[b] = out[3 + 8 * s + b];
        y.a[s] = from_coxeter(cox);
    }
    return y;
}

// Two-component sum gamma_I * <...>_I + gamma_E * <...>_E.  The E-side fiber
// is only enumerable for the degenerate configuration E = I; genuine
// Elkies-Gross data is accepted for pairings but not for fiber sums.
inline Scalar g2_fc_with_e(const BinaryCubic& w0, const WedgeTensor& beta_i, const WedgeTensor& beta_e,
                           const std::optional<EData>& edata, const Rational& gamma_i, const Rational& gamma_e) {
    Scalar total = Scalar(gamma_i) * g2_fc(w0, beta_i, JordanPairingTag::I());
    if (gamma_e == 0) return total;
    if (!edata) throw std::invalid_argument("g2_fc_with_e: E-side weight requires E data");
    auto tag = JordanPairingTag::E(edata->e);
    total += Scalar(gamma_e) * g2_fc(w0, beta_e, tag);
    return total;
}

}  // namespace extheta
