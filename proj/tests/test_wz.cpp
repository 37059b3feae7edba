#include <catch2/catch_amalgamated.hpp>

#include "sepinv/wz.hpp"

using namespace sepinv;

TEST_CASE("summand values") {
    REQUIRE(wz::summand_F(1, 0) == 6);
    REQUIRE(wz::summand_F(1, 1) == -18);
    REQUIRE(wz::summand_F(1, 2) == 6);
    REQUIRE(wz::summand_F(2, 1) == -700);
    for (long p = 1; p <= 5; ++p) {
        REQUIRE(wz::summand_F(p, 2 * p + 1) == 0);
        REQUIRE(wz::summand_F(p, -1) == 0);
    }
    REQUIRE_THROWS_AS(wz::summand_F(-1, 0), std::invalid_argument);
}

TEST_CASE("partial sums against the closed form") {
    REQUIRE(wz::partial_sum_S(1) == -6);
    REQUIRE(wz::partial_sum_S(2) == 90);
    REQUIRE(wz::closed_form(0) == 1);
    REQUIRE(wz::closed_form(1) == -6);
    REQUIRE(wz::closed_form(2) == 90);
    for (long p = 1; p <= 30; ++p) {
        const Rational cf = wz::closed_form(p);
        REQUIRE(wz::partial_sum_S(p) == cf);
        REQUIRE(cf.get_den() == 1);  // (p!)^3 divides (3p)!
    }
    // Degenerate edge: a single unit term.
    REQUIRE(wz::partial_sum_S(0) == 1);
}

TEST_CASE("certificate values") {
    for (long p = 1; p <= 6; ++p) REQUIRE(wz::certificate_G(p, 0) == 0);
    REQUIRE(wz::certificate_G(1, 1) == 1280);
    REQUIRE(wz::certificate_G(1, 2) == -6480);
    // G(1,2) - G(1,1) = 6*5*4*F(1,1) + 2*4*F(2,1).
    REQUIRE(wz::certificate_G(1, 2) - wz::certificate_G(1, 1) ==
            Rational(120) * wz::summand_F(1, 1) + Rational(8) * wz::summand_F(2, 1));
    REQUIRE_THROWS_AS(wz::certificate_G(1, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(wz::certificate_G(1, -1), std::invalid_argument);
}

TEST_CASE("certificate relation holds") {
    for (long p = 1; p <= 10; ++p) REQUIRE(wz::check_wz_pair(p));
}

TEST_CASE("recurrence holds") {
    // p=1 by hand: 6*5*4*(-6) + 2*4*90 = -720 + 720.
    REQUIRE(Rational(wz::recurrence_coeff_lo(1)) * wz::partial_sum_S(1) == -720);
    REQUIRE(Rational(wz::recurrence_coeff_hi(1)) * wz::partial_sum_S(2) == 720);
    for (long p = 1; p <= 15; ++p) {
        REQUIRE(wz::check_recurrence(p));
        REQUIRE(wz::recurrence_residual(p) == 0);
    }
}

TEST_CASE("telescoping boundary accounting") {
    // Summing the certificate relation over 0 <= k <= 2p-1 yields the
    // recurrence exactly when the boundary combination vanishes.
    for (long p = 1; p <= 15; ++p) REQUIRE(wz::boundary_residual(p) == 0);
}
