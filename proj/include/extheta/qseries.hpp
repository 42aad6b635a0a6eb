#pragma once

#include <map>
#include <vector>

#include "extheta/scalar.hpp"
#include "extheta/shells.hpp"

namespace extheta {

// Truncated q-expansion with exact rational coefficients c[0..prec].
struct QSeries {
    int prec = 0;
    std::vector<Rational> c;

    explicit QSeries(int n) : prec(n), c(n + 1) {}

    Rational coeff(int k) const {
        if (k < 0 || k > prec) throw std::out_of_range("QSeries: precision exceeded");
        return c[k];
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        int n = std::min(a.prec, b.prec);
        QSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.c[j] == 0) continue;
                r.c[i + j] += a.c[i] * b.c[j];
            }
        }
        return r;
    }
};

// q prod_{k>=1} (1-q^k)^24
inline const QSeries& delta_qexp(int prec = 50) {
    static std::map<int, QSeries> cache;
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
    QSeries acc(prec);
    acc.c[0] = 1;
    for (int k = 1; k <= prec; ++k) {
        QSeries f(prec);
        f.c[0] = 1;
        if (k <= prec) f.c[k] = -1;
        for (int rep = 0; rep < 24; ++rep) acc = acc * f;
    }
    QSeries shifted(prec);
    for (int k = 1; k <= prec; ++k) shifted.c[k] = acc.c[k - 1];
    return cache.emplace(prec, std::move(shifted)).first->second;
}

inline Integer tau(int n, int prec = 50) {
    if (n < 1) throw std::domain_error("tau: n must be positive");
    if (n > prec) throw std::out_of_range("tau: precision exceeded");
    Rational v = delta_qexp(prec).coeff(n);
    return v.get_num();
}

// Residuals of the Shimura relation tau(n) = sum_{d | n} d^5 alpha(n^2/d^2).
struct ShimuraReport {
    struct Row {
        int n;
        Rational residual;
    };
    std::vector<Row> rows;
    bool all_zero() const {
        for (const auto& r : rows)
            if (r.residual != 0) return false;
        return true;
    }
};

inline ShimuraReport shimura_consistency(const std::map<long, Rational>& alphas, int nmax) {
    ShimuraReport rep;
    for (int n = 1; n <= nmax; ++n) {
        Rational sum;
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            long dd = static_cast<long>(n) * n / (d * d);
            auto it = alphas.find(dd);
            if (it == alphas.end()) throw std::invalid_argument("shimura_consistency: missing alpha value");
            Integer d5;
            mpz_ui_pow_ui(d5.get_mpz_t(), static_cast<unsigned long>(d), 5);
            sum += Rational(d5) * it->second;
        }
        rep.rows.push_back({n, Rational(tau(n, std::max(nmax, 50))) - sum});
    }
    return rep;
}

// Harmonic theta series of the sublattice {(v,x)} with form v^2 + 4 n(x):
// coefficient of q^D is
//   sum_{v^2 + 4 n(x) = D} [v + i(x,(0,i))]^2 + [v - i(x,(0,i))]^2 + [v + i(x,(-i,0))]^2.
// Computed as a direct double loop over integer shell data, independently of
// the Freudenthal fiber machinery.  Imaginary parts must cancel exactly.
inline QSeries harmonic_theta(int dmax) {
    if (dmax < 1) throw std::domain_error("harmonic_theta: need dmax >= 1");
    QSeries out(dmax);
    std::vector<long long> re(dmax + 1, 0), im(dmax + 1, 0);
    for (long n = 0; 4 * n <= dmax; ++n) {
        const auto& sh = shell_raw(n);
        long vmax = static_cast<long>(isqrt_floor(Integer(dmax - 4 * n)).get_si());
        for (long v = -vmax; v <= vmax; ++v) {
            long d = v * v + 4 * n;
            if (d < 1 || d > dmax) continue;
            for (const auto& s : sh) {
                long long p = s.two_cd[5];   // (x, (0,i))
                long long mm = -s.two_cd[1]; // (x, (-i,0))
                re[d] += 3 * v * v - 2 * p * p - mm * mm;
                im[d] += 2 * v * mm;
            }
        }
    }
    for (int d = 0; d <= dmax; ++d) {
        if (im[d] != 0) throw std::logic_error("harmonic_theta: imaginary parts failed to cancel");
        out.c[d] = Rational(static_cast<long>(re[d]));
    }
    return out;
}

}  // namespace extheta
