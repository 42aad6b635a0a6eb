#include <catch2/catch_amalgamated.hpp>

#include "extheta/f4.hpp"
#include "testutil.hpp"

using namespace extheta;
using extheta::test::rnd_int;
using extheta::test::rnd_integral_jordan;
using extheta::test::rnd_jordan;

TEST_CASE("Phi operator basics", "[f4]") {
    // Phi_{1,E}(1) = 2E
    auto I = JordanElement::identity();
    for (int t = 0; t < 30; ++t) {
        auto e = rnd_jordan(2);
        REQUIRE(phi_apply(I, e, I) == Scalar(2) * e);
    }
    // Phi_{i(1),x} = Phi_{i(x),1}
    for (int t = 0; t < 20; ++t) {
        auto x = rnd_jordan(2);
        REQUIRE(phi(I, x) == phi(x, I));
    }
}

TEST_CASE("Phi vanishing on aligned rank-one data", "[f4]") {
    const auto& sh = shell_raw(1);
    int done = 0;
    while (done < 40) {
        JordanElement x;
        x.c[0] = Scalar(1);
        x.c[1] = Scalar(1);
        x.a[2] = sh[rnd_int(0, sh.size() - 1)].octonion();
        if (!rank_at_most_one(x)) continue;
        auto z = rnd_jordan(1);
        auto gamma = cross(z, x);
        REQUIRE(phi_is_zero(gamma, x));
        // duality: Phi_{gamma,x} = 0 implies Phi_{i(x),i(gamma)} = 0 and (gamma,x) = 0
        REQUIRE(phi_is_zero(x, gamma));
        REQUIRE(pair_trace(gamma, x).is_zero());
        ++done;
    }
}

TEST_CASE("wedge map has rank 52 with a 273-dimensional kernel", "[f4][slow]") {
    auto m = phi_wedge_matrix();
    REQUIRE(m.rows == 325);
    auto r = rank(m);
    REQUIRE(r == 52);
    REQUIRE(325 - r == 273);
}

TEST_CASE("the wedge map factors through wedge^2 J^0", "[f4]") {
    // Phi_{X ^ 1} = Phi_{i(X),1} - Phi_{i(1),X} = 0, so adding multiples of the
    // identity to either argument does not change Phi_{X ^ Y}.
    for (int t = 0; t < 10; ++t) {
        auto x = rnd_jordan(1), y = rnd_jordan(1);
        auto I = JordanElement::identity();
        auto base = phi(x, y) - phi(y, x);
        auto shifted = phi(x + I, y) - phi(y, x + I);
        REQUIRE(base == shifted);
    }
}

TEST_CASE("singular pair construction and checklist", "[f4]") {
    const auto& vb = V7Basis::get();
    const auto& sp = delta_singular_pair();
    // the section-5 matrices: x1 = e2, x2 = e2, x3 = u0
    REQUIRE(sp.x.c[0] == Scalar(1));
    REQUIRE(sp.x.c[1] == Scalar(-1));
    REQUIRE(sp.x.c[2] == Scalar(0));
    REQUIRE(sp.x.a[0] == vb.vec[2]);
    REQUIRE(sp.x.a[1] == vb.vec[2]);
    REQUIRE(sp.x.a[2] == vb.vec[0]);
    // y's (3,1) entry is a2' - a2
    REQUIRE(sp.y.a[1] == Scalar(-1) * vb.vec[5]);  // a2' - a2 = -e2*
    REQUIRE(sp.y.c[1] == Scalar(-1));
    REQUIRE(sp.y.c[2] == Scalar(1));

    // E_{x,y} is isotropic and singular: all four-parameter combinations
    for (int t = 0; t < 40; ++t) {
        auto a1 = test::rnd_scalar(2), a2 = test::rnd_scalar(2), a3 = test::rnd_scalar(2), a4 = test::rnd_scalar(2);
        FreudenthalElement w(Scalar(0), a1 * sp.x + a2 * sp.y, a3 * sp.x + a4 * sp.y, Scalar(0));
        REQUIRE(rank_at_most_one_w(w));
        REQUIRE(quartic(w).is_zero());
    }

    // bad inputs are rejected
    REQUIRE_THROWS_AS(singular_pair(Octonion(), vb.vec[0], vb.vec[2] - vb.vec[5]), std::invalid_argument);
    REQUIRE_THROWS_AS(singular_pair(vb.vec[2], Octonion(1l), vb.vec[2] - vb.vec[5]), std::invalid_argument);
}

TEST_CASE("beta_km lies in the wedge-map kernel", "[f4]") {
    const auto& sp = delta_singular_pair();
    REQUIRE((phi(sp.x, sp.y) - phi(sp.y, sp.x)).is_zero());
    auto b0 = beta_km(0, sp);
    REQUIRE(b0.degree == 0);
    auto b2 = beta_km(2, sp);
    REQUIRE(b2.degree == 2);
    REQUIRE(b2.terms.size() == 1);
}

TEST_CASE("wedge pairings", "[f4]") {
    const auto& sp = delta_singular_pair();
    auto tag = JordanPairingTag::I();
    auto e11 = JordanElement::e(0), e22 = JordanElement::e(1), e33 = JordanElement::e(2);
    REQUIRE(wedge_factor_pair(e22, e33, sp.x, sp.y, tag) == Scalar(-1));
    REQUIRE(wedge_factor_pair(e33, e11, sp.x, sp.y, tag) == Scalar(-1));
    REQUIRE(wedge_factor_pair(e11, e22, sp.x, sp.y, tag) == Scalar(-1));
    REQUIRE(wedge_factor_pair(e11, e22, e11, e22, tag) == Scalar(1));
    // symmetry of the I pairing under swapping the two wedge tensors
    for (int t = 0; t < 30; ++t) {
        auto b = rnd_jordan(1), c = rnd_jordan(1), x = rnd_jordan(1), y = rnd_jordan(1);
        REQUIRE(wedge_factor_pair(b, c, x, y, tag) == wedge_factor_pair(x, y, b, c, tag));
    }
    // multiplicative extension and degree checking
    auto p = WedgeTensor::power(e11, e22, 2);
    auto q = WedgeTensor::power(e11, e22, 2);
    REQUIRE(wedge_pair(p, q, tag) == Scalar(1));
    REQUIRE_THROWS_AS(wedge_pair(p, WedgeTensor::power(e11, e22, 3), tag), std::invalid_argument);
}

TEST_CASE("g2 action on J lands inside the Phi-wedge image", "[f4][slow]") {
    // flatten the wedge image over Q(i) and check the y1 action lies in its
    // row space (root vectors have Gaussian entries)
    auto m = phi_wedge_matrix();
    const auto& g2 = G2Structure::get();
    Mat<Scalar> ext(m.rows + 1, m.cols);
    for (std::size_t k = 0; k < m.data.size(); ++k) ext.data[k] = Scalar(m.data[k]);
    for (int col = 0; col < 27; ++col) {
        auto img = jr_coords(derivation_on_jordan(g2.y1, jr_basis(col)));
        for (int row = 0; row < 27; ++row)
            if (!img[row].is_zero()) ext.at(m.rows, 27 * row + col) = img[row];
    }
    REQUIRE(rank(std::move(ext)) == 52);
}
