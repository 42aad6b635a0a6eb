#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "extheta/scalar.hpp"

namespace extheta {

// Floating-point verification layer for the special-function identities.
// This is the only inexact corner of the library; nothing here feeds the
// exact modules.

namespace quad {

// Adaptive Simpson on [a,b].
inline double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                      double whole, double eps, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, eps * 0.5, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, eps * 0.5, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, eps, 48);
}

}  // namespace quad

// K_nu(x) = int_0^infty e^{-x cosh t} cosh(nu t) dt, adaptive quadrature on a
// truncated range.  Good to ~1e-11 relative for the parameters used here.
inline double bessel_k(double nu, double x) {
    if (x <= 0) throw std::domain_error("bessel_k: need x > 0");
    nu = std::fabs(nu);  // K_{-nu} = K_nu
    auto integrand = [nu, x](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
    // truncate where the integrand drops below 1e-18 of its peak
    double t_max = 1.0;
    double peak = integrand(0.0);
    while (integrand(t_max) > 1e-18 * peak && t_max < 720.0) t_max += 1.0;
    return quad::integrate(integrand, 0.0, t_max, 1e-13 * peak * t_max);
}

inline double pochhammer(double a, int n) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
}

// c_n^j = n! / (j! (n-2j)! 2^j), exactly.
inline Integer cnj(int n, int j) {
    if (j < 0 || 2 * j > n) return 0;
    Integer num, d1, d2, p2;
    mpz_fac_ui(num.get_mpz_t(), n);
    mpz_fac_ui(d1.get_mpz_t(), j);
    mpz_fac_ui(d2.get_mpz_t(), n - 2 * j);
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, j);
    return num / (d1 * d2 * p2);
}

// sum over j+k = s of (-1)^j c_m^k c_{m-2k}^j vanishes for 1 <= s <= m/2.
inline bool verify_cnj_identity(int m) {
    if (m < 0) throw std::domain_error("verify_cnj_identity: need m >= 0");
    for (int s = 1; 2 * s <= m; ++s) {
        Integer acc = 0;
        for (int k = 0; k <= s; ++k) {
            int j = s - k;
            Integer term = cnj(m, k) * cnj(m - 2 * k, j);
            acc += (j % 2 == 0) ? term : -term;
        }
        if (acc != 0) return false;
    }
    return true;
}

// Relative residual of
//   I_{l,m}(beta) = int_R e^{-iz} sum_k C_{m,k} z^{m-2k} (l+1/2)_{2m-k}
//                                    / (beta^2+z^2)^{l+2m-k+1/2} dz
// against the closed form 2^{1-l} i^m / (1/2)_l * beta^{-(l+m)} K_{l+m}(beta).
// For m odd both sides are purely imaginary; the real part of the quadrature
// is additionally required to vanish to high accuracy.
inline double verify_Iint(int l, int m, double beta) {
    if (l < 1 || m < 0 || beta <= 0) throw std::domain_error("verify_Iint: bad parameters");
    auto f = [&](double z) {
        double acc = 0.0;
        for (int k = 0; 2 * k <= m; ++k) {
            double c = ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(2.0, 2 * m - k) * cnj(m, k).get_d();
            acc += c * std::pow(z, m - 2 * k) * pochhammer(l + 0.5, 2 * m - k) /
                   std::pow(beta * beta + z * z, l + 2 * m - k + 0.5);
        }
        return acc;
    };
    // decay degree is at least 2l+1; truncate when beta^2+z^2 is large enough
    double scale = std::fabs(f(0.0)) + std::fabs(f(1.0)) + std::fabs(f(beta)) + 1e-300;
    double zmax = 10.0;
    while (std::fabs(f(zmax)) > 1e-17 * scale && zmax < 1e6) zmax *= 1.5;

    // int e^{-iz} f = int (cos - i sin) f; f has parity (-1)^m
    double even_part, odd_part;
    if (m % 2 == 0) {
        even_part = 2.0 * quad::integrate([&](double z) { return std::cos(z) * f(z); }, 0.0, zmax, 1e-14 * scale);
        odd_part = 0.0;
    } else {
        even_part = 0.0;
        odd_part = -2.0 * quad::integrate([&](double z) { return std::sin(z) * f(z); }, 0.0, zmax, 1e-14 * scale);
    }
    std::complex<double> quad_val(even_part, odd_part);

    std::complex<double> ipow(0, 1);
    std::complex<double> im = std::pow(ipow, m % 4);
    std::complex<double> closed = std::pow(2.0, 1 - l) * im / pochhammer(0.5, l) * std::pow(beta, -(l + m)) *
                                  bessel_k(l + m, beta);
    return std::abs(quad_val - closed) / std::abs(closed);
}

// Residual of d^n/du^n (u^b K_b(u)) against
//   sum_j (-1)^{n-j} c_n^j u^{b-j} K_{b-n+j}(u),
// with central finite differences of order matched to n <= 3.
inline double verify_bessel_derivative(int n, int b, double u) {
    if (n < 1 || n > 3 || b < n || u <= 0) throw std::domain_error("verify_bessel_derivative: bad parameters");
    auto f = [&](double x) { return std::pow(x, b) * bessel_k(b, x); };
    double h = n == 1 ? 1e-4 : (n == 2 ? 1e-3 : 1e-2);
    h *= std::max(1.0, u);
    double fd;
    if (n == 1)
        fd = (f(u + h) - f(u - h)) / (2 * h);
    else if (n == 2)
        fd = (f(u + h) - 2 * f(u) + f(u - h)) / (h * h);
    else
        fd = (f(u + 2 * h) - 2 * f(u + h) + 2 * f(u - h) - f(u - 2 * h)) / (2 * h * h * h);
    double closed = 0.0;
    for (int j = 0; 2 * j <= n; ++j) {
        double sgn = ((n - j) % 2 == 0) ? 1.0 : -1.0;
        closed += sgn * cnj(n, j).get_d() * std::pow(u, b - j) * bessel_k(b - n + j, u);
    }
    return std::fabs(fd - closed) / std::fabs(closed);
}

}  // namespace extheta
