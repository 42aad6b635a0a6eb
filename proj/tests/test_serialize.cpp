#include <catch2/catch_amalgamated.hpp>

#include "extheta/serialize.hpp"
#include "testutil.hpp"

using namespace extheta;
using extheta::test::rnd_freudenthal;
using extheta::test::rnd_integral_octonion;
using extheta::test::rnd_jordan;

TEST_CASE("octonion coxeter serialization round trips", "[serialize]") {
    for (int t = 0; t < 50; ++t) {
        Octonion x = test::rnd_octonion(3);
        REQUIRE(octonion_from_json(octonion_to_json(x)) == x);
    }
    // the basis order is part of the contract: basis vector k serializes as a
    // unit coordinate vector in slot k
    for (int k = 0; k < 8; ++k) {
        auto j = octonion_to_json(CoxeterBasis::get().vec[k]);
        for (int i = 0; i < 8; ++i) REQUIRE(j[i].get<std::string>() == (i == k ? "1/1" : "0/1"));
    }
}

TEST_CASE("jordan and freudenthal round trips", "[serialize]") {
    for (int t = 0; t < 30; ++t) {
        auto x = rnd_jordan(3);
        REQUIRE(jordan_from_json(jordan_to_json(x)) == x);
        auto w = rnd_freudenthal(2, true);
        REQUIRE(freudenthal_from_json(freudenthal_to_json(w)) == w);
    }
}

TEST_CASE("polynomial and cubic round trips", "[serialize]") {
    BiPolynomial p;
    p.degw = 2;
    p.degz = 1;
    p.add_term({2, 0, 0, 1, 0, 0}, Scalar(Rational(3, 2), Rational(-1)));
    p.add_term({0, 1, 1, 0, 0, 1}, Scalar(Rational(-7)));
    REQUIRE(bipoly_from_json(bipoly_to_json(p)) == p);
    BinaryCubic c(0, 1, Rational(-5, 2), 7);
    REQUIRE(cubic_from_json(cubic_to_json(c)) == c);
    auto w = wedge_to_json(beta_km(2, delta_singular_pair()));
    auto back = wedge_from_json(w);
    REQUIRE(back.degree == 2);
    REQUIRE(back.terms.size() == 1);
    REQUIRE(back.terms[0].factors[0].first == delta_singular_pair().x);
    auto g = null_pair_beta(1, 2);
    REQUIRE(g2tensor_from_json(g2tensor_to_json(g)) == g);
}

TEST_CASE("detect input files", "[serialize]") {
    Mat<Rational> m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = (i == j) ? Rational(1) : Rational(1, 2);
    HalfIntegralMatrix t0(m);
    DetectInput in;
    in.lambda = SiegelWeight::encode(0, 2);
    in.entries.push_back({t0, siegel_fc(t0, null_pair_beta(0, 2))});
    auto back = detect_input_from_json(detect_input_to_json(in));
    REQUIRE(back.lambda.l1 == in.lambda.l1);
    REQUIRE(back.entries.size() == 1);
    REQUIRE(back.entries[0].t0 == t0);
    REQUIRE(back.entries[0].coeff == in.entries[0].coeff);
}
