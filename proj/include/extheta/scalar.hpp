#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace extheta {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Element of Q(w) with w^2 = -1.  The one scalar field of the whole library;
// purely rational values carry im = 0.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long v) : re(v) {}
    GaussianRational(const Rational& r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }
    bool is_integral() const { return im == 0 && is_integer(re); }

    GaussianRational conj() const { return GaussianRational(re, -im); }

    GaussianRational& operator+=(const GaussianRational& o) {
        if (mpq_sgn(o.re.get_mpq_t())) re += o.re;
        if (mpq_sgn(o.im.get_mpq_t())) im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        if (mpq_sgn(o.re.get_mpq_t())) re -= o.re;
        if (mpq_sgn(o.im.get_mpq_t())) im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        const bool xi = mpq_sgn(im.get_mpq_t()) != 0, yi = mpq_sgn(o.im.get_mpq_t()) != 0;
        if (!xi && !yi) {
            re *= o.re;
            return *this;
        }
        if (!xi) {
            im = re * o.im;
            re *= o.re;
            return *this;
        }
        if (!yi) {
            re *= o.re;
            im *= o.re;
            return *this;
        }
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    // *this += x * y, component-sparse.
    void addmul(const GaussianRational& x, const GaussianRational& y) {
        const bool xr = mpq_sgn(x.re.get_mpq_t()) != 0, xi = mpq_sgn(x.im.get_mpq_t()) != 0;
        const bool yr = mpq_sgn(y.re.get_mpq_t()) != 0, yi = mpq_sgn(y.im.get_mpq_t()) != 0;
        if (xr) {
            if (yr) re += x.re * y.re;
            if (yi) im += x.re * y.im;
        }
        if (xi) {
            if (yi) re -= x.im * y.im;
            if (yr) im += x.im * y.re;
        }
    }
    GaussianRational operator-() const { return GaussianRational(-re, -im); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        GaussianRational r(a);
        return r *= b;
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        return GaussianRational((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Norm a*conj(a) down to Q, nonnegative.
    Rational qnorm() const { return re * re + im * im; }

    // Canonical rendering: "p/q" or "p/q+r/s*w" / "p/q-r/s*w".
    std::string str() const {
        std::string s = re.get_num().get_str() + "/" + re.get_den().get_str();
        if (im != 0) {
            Rational a = abs(im);
            s += (im < 0 ? "-" : "+");
            s += a.get_num().get_str() + "/" + a.get_den().get_str() + "*w";
        }
        return s;
    }

    static GaussianRational parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << v.str(); }
};

using Scalar = GaussianRational;

// Canonicalized fraction (the two-argument mpq_class constructor does not
// reduce, and mpq comparisons assume reduced form).
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline GaussianRational GaussianRational::parse(const std::string& s) {
    // Split at the sign introducing the "*w" part, if any.
    auto wpos = s.find("*w");
    if (wpos == std::string::npos) return GaussianRational(parse_rational(s));
    // find the +/- separating re from im, scanning from just before "*w" backwards
    std::size_t sep = std::string::npos;
    for (std::size_t k = wpos; k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
            sep = k;
            break;
        }
    }
    if (sep == std::string::npos) throw std::invalid_argument("bad scalar: " + s);
    Rational re = parse_rational(s.substr(0, sep));
    Rational im = parse_rational(s.substr(sep + 1, wpos - sep - 1));
    if (s[sep] == '-') im = -im;
    return GaussianRational(std::move(re), std::move(im));
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer sigma_k(const Integer& n, unsigned k) {
    if (n <= 0) throw std::domain_error("sigma_k: n must be positive");
    Integer s = 0, d = 1;
    for (; d * d <= n; ++d) {
        if (n % d == 0) {
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), d.get_mpz_t(), k);
            s += p;
            Integer e = n / d;
            if (e != d) {
                mpz_pow_ui(p.get_mpz_t(), e.get_mpz_t(), k);
                s += p;
            }
        }
    }
    return s;
}

}  // namespace extheta
