#include <catch2/catch_amalgamated.hpp>

#include "sepinv/polynomial.hpp"
#include "test_support.hpp"

using namespace sepinv;
using sepinv::testing::random_point;
using sepinv::testing::random_polynomial;
using sepinv::testing::var;

namespace {
const RingDescriptor R2{2, false};
}

TEST_CASE("rational helpers normalize") {
    REQUIRE(format_rational(make_rational(2, 4)) == "1/2");
    REQUIRE(format_rational(make_rational(1, -2)) == "-1/2");
    REQUIRE(format_rational(Rational(0)) == "0/1");
    REQUIRE(parse_rational("-3/6") == make_rational(-1, 2));
    REQUIRE(parse_rational("7") == Rational(7));
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    REQUIRE(factorial(6) == 720);
    REQUIRE(factorial(30) == Integer("265252859812191058636308480000000"));
    REQUIRE(binomial(6, 2) == 15);
    REQUIRE(binomial(2, 5) == 0);
    REQUIRE(falling_factorial_quotient(5, 2) == 60);
}

TEST_CASE("addition") {
    const Polynomial x0 = var(R2, 0), x1 = var(R2, 1), x2 = var(R2, 2);
    const Polynomial f1 = x0 * x2 - make_rational(1, 2) * x1 * x1;

    REQUIRE((x0 + (-x0)).is_zero());
    REQUIRE(f1 + make_rational(1, 2) * x1 * x1 == x0 * x2);
    REQUIRE((x0 + x1).term_count() == 2);
    REQUIRE_THROWS_AS(x0 + var({3, false}, 0), std::invalid_argument);
}

TEST_CASE("multiplication") {
    const Polynomial x0 = var(R2, 0), x1 = var(R2, 1);
    REQUIRE((x0 * x0).leading_term().mono.exps[0] == 2);
    REQUIRE((x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1);
    REQUIRE(make_rational(1, 2) * x1 * (make_rational(1, 2) * x1) == make_rational(1, 4) * x1 * x1);
    REQUIRE_THROWS_AS(x0 * var({3, false}, 0), std::invalid_argument);
}

TEST_CASE("evaluation") {
    const Polynomial x0 = var(R2, 0), x1 = var(R2, 1), x2 = var(R2, 2);
    const Polynomial f = x0 * x2 - make_rational(1, 2) * x1 * x1;
    REQUIRE(f.eval({Rational(1), Rational(0), Rational(1)}) == 1);
    REQUIRE(x0.eval({Rational(0), Rational(5), Rational(7)}) == 0);
    REQUIRE(f.eval({Rational(0), Rational(1), Rational(0)}) == make_rational(-1, 2));
    REQUIRE_THROWS_AS(f.eval({Rational(1), Rational(2)}), std::invalid_argument);
    const RingDescriptor ext{2, true};
    REQUIRE_THROWS_AS(var(ext, 0).eval({Rational(1), Rational(0), Rational(0)}), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    const Polynomial x1 = var(R2, 1);
    REQUIRE(partial_derivative(x1 * x1, 1) == Rational(2) * x1);
    REQUIRE(partial_derivative(var(R2, 0) * var(R2, 2), 1).is_zero());
    const RingDescriptor ext{2, true};
    const Polynomial y0 = var(ext, 3), y1 = var(ext, 4);
    REQUIRE(partial_derivative(y0 * y0 * y1, 3) == Rational(2) * y0 * y1);
    REQUIRE_THROWS_AS(partial_derivative(x1, 5), std::invalid_argument);
}

TEST_CASE("distributivity holds on random inputs") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = random_polynomial(rng, R2);
        const Polynomial g = random_polynomial(rng, R2);
        const Polynomial h = random_polynomial(rng, R2);
        REQUIRE(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = random_polynomial(rng, R2);
        const Polynomial g = random_polynomial(rng, R2);
        const RationalPoint v = random_point(rng, 2);
        REQUIRE((f * g).eval(v) == f.eval(v) * g.eval(v));
        REQUIRE((f + g).eval(v) == f.eval(v) + g.eval(v));
    }
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial f = random_polynomial(rng, {3, false}) * random_polynomial(rng, {3, false});
        std::vector<Term> copy(f.terms().begin(), f.terms().end());
        REQUIRE(Polynomial::from_terms(f.ring(), std::move(copy)) == f);
        for (std::size_t i = 0; i + 1 < f.terms().size(); ++i)
            REQUIRE(monomial_cmp(f.terms()[i].mono, f.terms()[i + 1].mono) > 0);
        for (const auto& t : f.terms()) REQUIRE(t.coeff != 0);
    }
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const RingDescriptor ring{static_cast<int>(sepinv::testing::rand_int(rng, 1, 4)), trial % 3 == 0};
        const Polynomial f = random_polynomial(rng, ring);
        REQUIRE(Polynomial::from_json(f.to_json()) == f);
    }
    // Terms appear in the canonical descending order on the wire.
    const Polynomial f1 = var(R2, 0) * var(R2, 2) - make_rational(1, 2) * var(R2, 1) * var(R2, 1);
    const auto j = f1.to_json();
    REQUIRE(j["terms"].size() == 2);
    REQUIRE(j["terms"][0]["coeff"] == "1/1");
    REQUIRE(j["terms"][0]["exps"] == nlohmann::json::array({1, 0, 1}));
    REQUIRE(j["terms"][1]["coeff"] == "-1/2");
    REQUIRE(j["terms"][1]["exps"] == nlohmann::json::array({0, 2, 0}));
    REQUIRE_THROWS_AS(Polynomial::from_json(nlohmann::json{{"n", 1}, {"extended", false},
                                                           {"terms", {{{"coeff", "1/1"}, {"exps", {1, 0, 0}}}}}}),
                      std::invalid_argument);
}

TEST_CASE("pretty printing") {
    const Polynomial x0 = var(R2, 0), x1 = var(R2, 1), x2 = var(R2, 2);
    REQUIRE((x0 * x2 - make_rational(1, 2) * x1 * x1).pretty() == "x0*x2 - 1/2*x1^2");
    REQUIRE(Polynomial::zero(R2).pretty() == "0");
    REQUIRE(Polynomial::constant(R2, make_rational(-3, 2)).pretty() == "-3/2");
}
