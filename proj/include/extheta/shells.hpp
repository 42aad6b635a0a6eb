#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "extheta/octonion.hpp"

namespace extheta {

// One integral octonion of a norm shell, in both coordinate systems.
// two_cd holds doubled Cayley-Dickson coordinates (always integers).
struct ShellVec {
    std::array<int, 8> cox;
    std::array<int, 8> two_cd;

    int trace() const { return two_cd[0]; }  // tr = 2 * cd[0]

    Octonion octonion() const {
        Octonion o;
        Scalar half(Rational(1, 2));
        for (int k = 0; k < 8; ++k)
            if (two_cd[k] != 0) o.cd[k] = Scalar(frac(two_cd[k], 2));
        return o;
    }
};

// Enumeration of {x in R_Theta : n(x) = N} as coxeter-integral vectors, via
// exact bound propagation against the E8 Gram matrix.  Results are cached and
// ordered lexicographically on coxeter coordinates.
inline const std::vector<ShellVec>& shell_raw(long n) {
    static std::map<long, std::vector<ShellVec>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const auto& cb = CoxeterBasis::get();
    // (x,x) = 2 n(x)
    auto coords = quadratic_shell(cb.gram, Integer(2 * n));
    std::vector<ShellVec> vecs;
    vecs.reserve(coords.size());
    for (const auto& c : coords) {
        ShellVec v;
        for (int k = 0; k < 8; ++k) v.cox[k] = static_cast<int>(c[k]);
        for (int k = 0; k < 8; ++k) {
            long acc = 0;
            for (int b = 0; b < 8; ++b) acc += static_cast<long>(c[b]) * cb.two_cd[b][k];
            v.two_cd[k] = static_cast<int>(acc);
        }
        vecs.push_back(v);
    }
    return cache.emplace(n, std::move(vecs)).first->second;
}

inline std::vector<Octonion> shell(long n) {
    if (n < 0) throw std::domain_error("shell: negative norm");
    std::vector<Octonion> out;
    for (const auto& v : shell_raw(n)) out.push_back(v.octonion());
    return out;
}

// {x in R_Theta : n(x) = N, tr(x) = t}
inline std::vector<ShellVec> shell_with_trace(long n, long t) {
    std::vector<ShellVec> out;
    if (n < 0) return out;
    for (const auto& v : shell_raw(n))
        if (v.trace() == t) out.push_back(v);
    return out;
}

// Table-driven product on doubled CD coordinates: out = (2a)(2b) = 4ab.
inline void oct_mul_int(const std::array<int, 8>& a, const std::array<int, 8>& b, std::array<long, 8>& out) {
    const auto& t = OctMulTable::get();
    out.fill(0);
    for (int p = 0; p < 8; ++p) {
        if (a[p] == 0) continue;
        for (int q = 0; q < 8; ++q) {
            if (b[q] == 0) continue;
            out[t.idx[p][q]] += static_cast<long>(t.sgn[p][q]) * a[p] * b[q];
        }
    }
}

}  // namespace extheta
