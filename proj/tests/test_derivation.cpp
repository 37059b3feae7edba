#include <catch2/catch_amalgamated.hpp>

#include "sepinv/derivation.hpp"
#include "sepinv/invariants.hpp"
#include "test_support.hpp"

using namespace sepinv;
using sepinv::testing::rand_int;
using sepinv::testing::random_point;
using sepinv::testing::random_polynomial;
using sepinv::testing::var;

TEST_CASE("defining action of the derivations") {
    for (int n = 1; n <= 6; ++n) {
        const RingDescriptor ring{n, false};
        REQUIRE(derive(DerivationKind::Weitzenboeck, n, var(ring, 1)) == var(ring, 0));
        for (int k = 0; k < n; ++k)
            REQUIRE(derive(DerivationKind::Delta, n, var(ring, k)) ==
                    Rational((n - k) * (k + 1)) * var(ring, k + 1));
        REQUIRE(derive(DerivationKind::Delta, n, var(ring, n)).is_zero());
    }
    // D s_1 = f_1 in R_3.
    REQUIRE(derive(DerivationKind::Weitzenboeck, 3, build_s(3, 1)) == build_f(3, 1));
    REQUIRE(derive(DerivationKind::Delta, 2, var({2, false}, 0)) == Rational(2) * var({2, false}, 1));
    REQUIRE_THROWS_AS(derive(DerivationKind::Weitzenboeck, 2, var({2, true}, 0)), std::invalid_argument);
}

TEST_CASE("nilpotency index") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(nilpotency_index(DerivationKind::Weitzenboeck, n, var({n, false}, k)) == k);
    REQUIRE(!nilpotency_index(DerivationKind::Weitzenboeck, 3, Polynomial::zero({3, false})).has_value());
    const RingDescriptor R2{2, false};
    REQUIRE(nilpotency_index(DerivationKind::Weitzenboeck, 2, var(R2, 0) * var(R2, 2)) == 2);
}

TEST_CASE("isobaric weight") {
    REQUIRE(isobaric_weight(3, var({3, false}, 0)) == 3);
    REQUIRE(isobaric_weight(4, build_f(4, 1)) == 4);
    REQUIRE(!isobaric_weight(2, var({2, false}, 0) + var({2, false}, 1)).has_value());
    REQUIRE_THROWS_AS(isobaric_weight(2, Polynomial::zero({2, false})), std::invalid_argument);
}

TEST_CASE("flow of a point") {
    std::mt19937_64 rng(31415);
    const Rational a = make_rational(3, 2);
    const RationalPoint v1{Rational(4), Rational(-1)};
    const RationalPoint moved = flow_point(1, a, v1);
    REQUIRE(moved[0] == 4);
    REQUIRE(moved[1] == Rational(-1) + a * 4);

    const RationalPoint w = flow_point(2, Rational(1), {Rational(1), Rational(2), Rational(3)});
    REQUIRE(w == RationalPoint{Rational(1), Rational(3), make_rational(11, 2)});

    for (int n = 1; n <= 6; ++n) {
        const RationalPoint v = random_point(rng, n);
        REQUIRE(flow_point(n, Rational(0), v) == v);
    }
    REQUIRE_THROWS_AS(flow_point(2, Rational(1), {Rational(1)}), std::invalid_argument);
}

TEST_CASE("exponential of the derivation") {
    const RingDescriptor R2{2, false};
    const Rational a = make_rational(-5, 3);
    REQUIRE(exp_derivation(2, a, var(R2, 0)) == var(R2, 0));
    REQUIRE(exp_derivation(2, a, var(R2, 1)) == var(R2, 1) + a * var(R2, 0));
    REQUIRE(exp_derivation(2, Rational(1), var(R2, 2)) ==
            var(R2, 2) + var(R2, 1) + make_rational(1, 2) * var(R2, 0));
}

TEST_CASE("projections") {
    REQUIRE(project(1, 2, build_f(2, 1)) == make_rational(-1, 2) * var({1, false}, 0) * var({1, false}, 0));
    for (int n = 2; n <= 6; ++n)
        for (int m = 0; m < n; ++m) REQUIRE(project(m, n, var({n, false}, 0)).is_zero());
    const RingDescriptor R2{2, false};
    REQUIRE(project(2, 4, build_f(4, 2)) == make_rational(1, 2) * var(R2, 0) * var(R2, 0));
    REQUIRE_THROWS_AS(project(2, 2, build_f(2, 1)), std::invalid_argument);
}

TEST_CASE("projection intertwines the derivations") {
    std::mt19937_64 rng(424242);
    for (int n = 2; n <= 8; ++n) {
        const Polynomial f = random_polynomial(rng, {n, false});
        for (int m = 0; m < n; ++m)
            REQUIRE(project(m, n, derive(DerivationKind::Weitzenboeck, n, f)) ==
                    derive(DerivationKind::Weitzenboeck, m, project(m, n, f)));
    }
}

TEST_CASE("flow compatibility fixes the direction convention") {
    std::mt19937_64 rng(5150);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            const Polynomial f = random_polynomial(rng, {n, false});
            const Rational a = make_rational(rand_int(rng, -9, 9), rand_int(rng, 1, 3));
            const RationalPoint v = random_point(rng, n);
            REQUIRE(exp_derivation(n, a, f).eval(v) == f.eval(flow_point(n, a, v)));
        }
    }
}

TEST_CASE("flow is a group action") {
    std::mt19937_64 rng(161803);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            const Rational a(rand_int(rng, -9, 9));
            const Rational b(rand_int(rng, -9, 9));
            const RationalPoint v = random_point(rng, n);
            REQUIRE(flow_point(n, a, flow_point(n, b, v)) == flow_point(n, a + b, v));
        }
    }
}

TEST_CASE("kernel elements are flow-constant") {
    std::mt19937_64 rng(2718);
    for (int n = 2; n <= 6; ++n) {
        // Random products of the known invariants stay in the kernel.
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial f = build_f(n, static_cast<int>(rand_int(rng, 0, n / 2)));
            f = f * build_f(n, static_cast<int>(rand_int(rng, 0, n / 2)));
            REQUIRE(derive(DerivationKind::Weitzenboeck, n, f).is_zero());
            const Rational a(rand_int(rng, -9, 9));
            const RationalPoint v = random_point(rng, n);
            REQUIRE(f.eval(flow_point(n, a, v)) == f.eval(v));
        }
    }
}

TEST_CASE("Delta nilpotency equals the weight on invariants") {
    for (int n = 1; n <= 10; ++n) {
        const RingDescriptor ring{n, false};
        REQUIRE(nilpotency_index(DerivationKind::Delta, n, var(ring, 0)) == n);
        for (int m = 1; 2 * m <= n; ++m) {
            const Polynomial f = build_f(n, m);
            REQUIRE(nilpotency_index(DerivationKind::Delta, n, f) == *isobaric_weight(n, f));
        }
    }
}

TEST_CASE("derivations satisfy the Leibniz rule") {
    std::mt19937_64 rng(6174);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rand_int(rng, 1, 5));
        const Polynomial f = random_polynomial(rng, {n, false});
        const Polynomial g = random_polynomial(rng, {n, false});
        for (const auto kind : {DerivationKind::Weitzenboeck, DerivationKind::Delta})
            REQUIRE(derive(kind, n, f * g) == derive(kind, n, f) * g + f * derive(kind, n, g));
    }
}
