#pragma once

#include <array>

#include "extheta/scalar.hpp"

namespace extheta {

// Hamilton quaternions over the Gaussian-rational scalar field, basis (1,i,j,k).
// This is the "ramified at 2" rational quaternion algebra; it only appears as
// the building block of the Cayley-Dickson doubling.
struct Quaternion {
    std::array<Scalar, 4> c{};

    Quaternion() = default;
    explicit Quaternion(long v) { c[0] = Scalar(v); }

    static Quaternion basis(int k) {
        Quaternion q;
        q.c[k] = Scalar(1);
        return q;
    }

    Quaternion conj() const {
        Quaternion q;
        q.c[0] = c[0];
        for (int k = 1; k < 4; ++k) q.c[k] = -c[k];
        return q;
    }

    Scalar norm() const {
        Scalar n;
        for (const auto& x : c) n += x * x;
        return n;
    }
    Scalar trace() const { return c[0] + c[0]; }

    Quaternion& operator+=(const Quaternion& o) {
        for (int k = 0; k < 4; ++k) c[k] += o.c[k];
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        for (int k = 0; k < 4; ++k) c[k] -= o.c[k];
        return *this;
    }
    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator*(const Scalar& s, const Quaternion& q) {
        Quaternion r;
        for (int k = 0; k < 4; ++k) r.c[k] = s * q.c[k];
        return r;
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        // i^2 = j^2 = -1, ij = k = -ji
        static constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static constexpr int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        Quaternion r;
        for (int p = 0; p < 4; ++p) {
            if (a.c[p].is_zero()) continue;
            for (int q = 0; q < 4; ++q) {
                if (b.c[q].is_zero()) continue;
                Scalar t = a.c[p] * b.c[q];
                if (sgn[p][q] < 0)
                    r.c[idx[p][q]] -= t;
                else
                    r.c[idx[p][q]] += t;
            }
        }
        return r;
    }
};

}  // namespace extheta
