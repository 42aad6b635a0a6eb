#include <catch2/catch_amalgamated.hpp>

#include "extheta/qseries.hpp"

using namespace extheta;

TEST_CASE("Ramanujan tau from the eta product", "[qseries]") {
    REQUIRE(tau(1) == 1);
    REQUIRE(tau(2) == -24);
    REQUIRE(tau(3) == 252);
    REQUIRE(tau(4) == -1472);
    REQUIRE(tau(5) == 4830);
    REQUIRE(tau(6) == -6048);
    // multiplicativity at a coprime pair, a classical sanity anchor
    REQUIRE(tau(6) == tau(2) * tau(3));
    REQUIRE(tau(10) == tau(2) * tau(5));
    REQUIRE_THROWS_AS(tau(0), std::domain_error);
    REQUIRE_THROWS_AS(tau(99, 50), std::out_of_range);
}

TEST_CASE("Shimura relation arithmetic", "[qseries]") {
    std::map<long, Rational> alphas = {{1, 1}, {4, -56}, {9, 9}};
    auto rep = shimura_consistency(alphas, 3);
    REQUIRE(rep.rows.size() == 3);
    REQUIRE(rep.all_zero());
    // a wrong alpha(4) shows up as the tau(2) residual
    alphas[4] = -55;
    auto bad = shimura_consistency(alphas, 3);
    REQUIRE(bad.rows[1].residual == -1);
    REQUIRE_FALSE(bad.all_zero());
    REQUIRE_THROWS_AS(shimura_consistency({{1, Rational(1)}}, 2), std::invalid_argument);
}

TEST_CASE("harmonic theta series", "[qseries]") {
    auto theta = harmonic_theta(16);
    REQUIRE(theta.coeff(1) == 6);          // x = 0, v = +-1
    REQUIRE(theta.coeff(4) == 6 * -56);    // alpha(4) = -56 after normalization
    REQUIRE(theta.coeff(9) == 6 * 9);
    for (int d = 0; d <= 16; ++d)
        if (d % 4 == 2 || d % 4 == 3) REQUIRE(theta.coeff(d) == 0);
    for (int d = 0; d <= 16; ++d) REQUIRE(is_integer(theta.coeff(d)));
}
