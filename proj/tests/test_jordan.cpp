#include <catch2/catch_amalgamated.hpp>

#include "extheta/f4.hpp"
#include "extheta/jordan.hpp"
#include "testutil.hpp"

using namespace extheta;
using extheta::test::rnd_integral_jordan;
using extheta::test::rnd_jordan;

TEST_CASE("cubic norm basics", "[jordan]") {
    auto I = JordanElement::identity();
    REQUIRE(I.norm() == Scalar(1));
    REQUIRE(I.adjoint() == I);
    REQUIRE(I.trace() == Scalar(3));
    REQUIRE(JordanElement::diag(Scalar(2), Scalar(3), Scalar(5)).norm() == Scalar(30));
    REQUIRE((I + JordanElement::e(0)).norm() == Scalar(2));
    REQUIRE(JordanElement::e(0).adjoint().is_zero());
    REQUIRE((I + I).adjoint() == Scalar(4) * I);
}

TEST_CASE("adjoint identity and trace of adjoint", "[jordan]") {
    for (int t = 0; t < 100; ++t) {
        auto x = rnd_jordan(2);
        REQUIRE(x.adjoint().adjoint() == x.norm() * x);
        REQUIRE(pair_trace(x, x.adjoint()) == Scalar(3) * x.norm());
    }
}

TEST_CASE("trilinear form", "[jordan]") {
    auto I = JordanElement::identity();
    REQUIRE(trilinear(I, I, I) == Scalar(6));
    REQUIRE(trilinear(I, I, JordanElement::e(0)) == Scalar(2));
    REQUIRE(trilinear(JordanElement::e(0), JordanElement::e(1), JordanElement::e(2)) == Scalar(1));
    for (int t = 0; t < 30; ++t) {
        auto x = rnd_jordan(2), y = rnd_jordan(2), z = rnd_jordan(2);
        REQUIRE(trilinear(x, y, z) == trilinear(y, x, z));
        REQUIRE(trilinear(x, y, z) == trilinear(x, z, y));
        REQUIRE(trilinear(x, x, x) == Scalar(6) * x.norm());
        // (x,y,z) = (x x y, z) shared with the cross product
        REQUIRE(trilinear(x, y, z) == pair_trace(cross(x, y), z));
    }
}

TEST_CASE("pairings", "[jordan]") {
    auto I = JordanElement::identity();
    auto tagI = JordanPairingTag::I();
    REQUIRE(pair_tagged(I, I, tagI) == Scalar(3));
    REQUIRE(pair_tagged(JordanElement::e(0), JordanElement::e(1), tagI) == Scalar(0));
    // (u,v)_E with E = I reduces to the trace pairing
    auto tagE = JordanPairingTag::E(JordanElement::identity());
    for (int t = 0; t < 100; ++t) {
        auto u = rnd_jordan(2), v = rnd_jordan(2);
        REQUIRE(pair_tagged(u, v, tagE) == pair_trace(u, v));
    }
    REQUIRE_THROWS_AS(JordanPairingTag::E(Scalar(2) * JordanElement::identity()), std::invalid_argument);
}

TEST_CASE("rank-one predicate", "[jordan]") {
    REQUIRE(rank_at_most_one(JordanElement()));
    REQUIRE(rank_at_most_one(JordanElement::e(0)));
    REQUIRE(rank_at_most_one(-JordanElement::e(0)));
    REQUIRE_FALSE(rank_at_most_one(JordanElement::identity()));
    // the identity X x I = tr(X) I - X
    for (int t = 0; t < 30; ++t) {
        auto x = rnd_jordan(2);
        auto I = JordanElement::identity();
        REQUIRE(cross(x, I) == x.trace() * I - x);
    }
}

TEST_CASE("rank-one cross identities", "[jordan]") {
    // (u x v1) x (u x v2) = (u,v1,v2) u  and  (x x z)^# = (x,z^#) x  for u,x rank one
    const auto& sh = shell_raw(1);
    for (int t = 0; t < 40; ++t) {
        JordanElement u;
        u.c[0] = Scalar(1);
        u.c[1] = Scalar(1);
        u.a[2] = sh[test::rnd_int(0, sh.size() - 1)].octonion();
        if (!rank_at_most_one(u)) continue;
        auto v1 = rnd_jordan(2), v2 = rnd_jordan(2);
        REQUIRE(cross(cross(u, v1), cross(u, v2)) == trilinear(u, v1, v2) * u);
        REQUIRE(cross(u, v1).adjoint() == pair_trace(u, v1.adjoint()) * u);
    }
}

TEST_CASE("content", "[jordan]") {
    auto I = JordanElement::identity();
    REQUIRE(content(I) == 1);
    REQUIRE(content(Scalar(2) * I) == 2);
    REQUIRE(content(Scalar(6) * JordanElement::e(0) + Scalar(4) * JordanElement::e(1)) == 2);
    REQUIRE_THROWS_AS(content(JordanElement()), std::invalid_argument);
    JordanElement half = JordanElement::diag(Scalar(Rational(1, 2)), Scalar(0), Scalar(0));
    REQUIRE_THROWS_AS(content(half), std::invalid_argument);
}

TEST_CASE("projection to H3(Q)", "[jordan]") {
    auto I = JordanElement::identity();
    auto m = project_h3q(I);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) REQUIRE(m.at(i, j) == (i == j ? 1 : 0));
    // unit octonion slot: tr(1) = 2 gives off-diagonal 1
    auto t = JordanElement::slot(0, Octonion(1l));
    auto mt = project_h3q(t);
    REQUIRE(mt.at(1, 2) == 1);
    REQUIRE(mt.at(2, 1) == 1);
    REQUIRE(mt.at(0, 0) == 0);
    // trace-zero slot projects away
    auto tz = JordanElement::slot(0, Octonion::cd_basis(4));
    REQUIRE(project_h3q(tz).at(1, 2) == 0);
}

TEST_CASE("Levi action", "[jordan]") {
    auto I3 = Mat<Rational>::identity(3);
    for (int t = 0; t < 20; ++t) {
        auto x = rnd_jordan(2);
        REQUIRE(sp6_levi_act(I3, x) == x);
    }
    // n = 2*identity on I: norm scales by det(n)^{-2}
    Mat<Rational> two = Mat<Rational>::identity(3);
    for (int k = 0; k < 3; ++k) two.at(k, k) = 2;
    auto I = JordanElement::identity();
    auto moved = sp6_levi_act(two, I);
    REQUIRE(moved.norm() == Scalar(Rational(1, 64)) * I.norm());
    // random invertible n, random X: norm(result) det(n)^2 = norm(X)
    int done = 0;
    while (done < 200) {
        Mat<Rational> n(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) n.at(i, j) = Rational(test::rnd_int(-3, 3));
        Rational det = n.at(0, 0) * (n.at(1, 1) * n.at(2, 2) - n.at(1, 2) * n.at(2, 1)) -
                       n.at(0, 1) * (n.at(1, 0) * n.at(2, 2) - n.at(1, 2) * n.at(2, 0)) +
                       n.at(0, 2) * (n.at(1, 0) * n.at(2, 1) - n.at(1, 1) * n.at(2, 0));
        if (det == 0) continue;
        auto x = rnd_integral_jordan(2);
        auto y = sp6_levi_act(n, x);
        REQUIRE(y.norm() * Scalar(det * det) == x.norm());
        ++done;
    }
    Mat<Rational> sing(3, 3);
    REQUIRE_THROWS_AS(sp6_levi_act(sing, JordanElement::identity()), std::domain_error);
}

TEST_CASE("rank one is Levi and derivation stable", "[jordan]") {
    const auto& g2 = G2Structure::get();
    const auto& sh = shell_raw(1);
    for (int t = 0; t < 30; ++t) {
        JordanElement u;
        u.c[1] = Scalar(1);
        u.c[2] = Scalar(1);
        u.a[0] = sh[test::rnd_int(0, sh.size() - 1)].octonion();
        if (!rank_at_most_one(u)) continue;
        Mat<Rational> n = Mat<Rational>::identity(3);
        n.at(0, 1) = Rational(test::rnd_int(-2, 2));
        n.at(1, 2) = Rational(test::rnd_int(-2, 2));
        REQUIRE(rank_at_most_one(sp6_levi_act(n, u)));
        // exponentiated nilpotent g2 root vectors act through Phi-type maps in f4
        REQUIRE(rank_at_most_one(exp_derivation_on_jordan(g2.y1, u)));
        REQUIRE(rank_at_most_one(exp_derivation_on_jordan(g2.x2, u)));
    }
}

TEST_CASE("jordan multiplication sanity", "[jordan]") {
    auto I = JordanElement::identity();
    for (int t = 0; t < 20; ++t) {
        auto x = rnd_jordan(2), y = rnd_jordan(2);
        REQUIRE(jordan_mul(x, y) == jordan_mul(y, x));
        REQUIRE(jordan_mul(I, x) == x);
        // rank-one squares: X o X = tr(X) X when X^# = 0
    }
    auto e0 = JordanElement::e(0);
    REQUIRE(jordan_mul(e0, e0) == e0);
}
