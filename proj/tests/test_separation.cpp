#include <catch2/catch_amalgamated.hpp>

#include "sepinv/separation.hpp"
#include "test_support.hpp"

using namespace sepinv;

namespace {
RationalPoint pt(std::initializer_list<long> coords) {
    RationalPoint v;
    for (long c : coords) v.push_back(Rational(c));
    return v;
}
}  // namespace

TEST_CASE("evaluator agrees with the expanded polynomials") {
    std::mt19937_64 rng(64);
    for (int n = 2; n <= 6; ++n) {
        const SeparatingSetEvaluator E(n);
        const SeparatingSet set = build_E(n);
        REQUIRE(E.labels().size() == set.count());
        for (int trial = 0; trial < 10; ++trial) {
            const RationalPoint v = sepinv::testing::random_point(rng, n);
            const auto values = E.eval_all(v);
            for (std::size_t i = 0; i < values.size(); ++i) REQUIRE(values[i] == set.elements[i].poly.eval(v));
        }
    }
}

TEST_CASE("separation verdicts") {
    const RationalPoint v = pt({1, 2, 3});
    const RationalPoint w = flow_point(2, Rational(1), v);
    REQUIRE(!decide_separated(2, v, w).separated);

    const SeparationVerdict verdict = decide_separated(2, pt({1, 0, 0}), pt({1, 0, 1}));
    REQUIRE(verdict.separated);
    REQUIRE(verdict.witness->label == ElementLabel::f(1));
    REQUIRE(verdict.witness->at_v == 0);
    REQUIRE(verdict.witness->at_w == 1);

    REQUIRE(!decide_separated(2, v, v).separated);
}

TEST_CASE("verdicts are symmetric") {
    std::mt19937_64 rng(12);
    const SeparatingSetEvaluator E(3);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalPoint v = sepinv::testing::random_point(rng, 3);
        const RationalPoint w = sepinv::testing::random_point(rng, 3);
        REQUIRE(decide_separated(E, v, w).separated == decide_separated(E, w, v).separated);
        REQUIRE(!decide_separated(E, v, v).separated);
    }
}

TEST_CASE("orbit decisions") {
    // (1,2,3) flows to (1,3,11/2) at a=1.
    const OrbitVerdict same = same_orbit(2, pt({1, 2, 3}), {Rational(1), Rational(3), make_rational(11, 2)});
    REQUIRE(same.same_orbit);
    REQUIRE(*same.translation == 1);

    // Not a flow translate: f_1 takes values 1 vs 0.
    const OrbitVerdict other = same_orbit(2, pt({1, 2, 3}), {Rational(1), Rational(3), make_rational(9, 2)});
    REQUIRE(!other.same_orbit);
    REQUIRE(decide_separated(2, pt({1, 2, 3}), {Rational(1), Rational(3), make_rational(9, 2)}).separated);

    REQUIRE(!same_orbit(2, pt({0, 0, 1}), pt({0, 0, 2})).same_orbit);
    REQUIRE(same_orbit(2, pt({0, 0, 1}), pt({0, 0, 1})).same_orbit);
    REQUIRE_THROWS_AS(same_orbit(2, pt({1, 2}), pt({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("orbit-versus-invariant gap") {
    // Different orbits that no invariant distinguishes.
    const RationalPoint v = pt({0, 1, 0});
    const RationalPoint w = pt({0, -1, 0});
    REQUIRE(!same_orbit(2, v, w).same_orbit);
    REQUIRE(!decide_separated(2, v, w).separated);
    REQUIRE(oracle_equivalent(2, 6, v, w));
}

TEST_CASE("random translates round trip through the orbit decision") {
    std::mt19937_64 rng(7777);
    const SeparatingSetEvaluator E(4);
    for (int trial = 0; trial < 30; ++trial) {
        RationalPoint v = sepinv::testing::random_point(rng, 4);
        v[0] = Rational(sepinv::testing::rand_int(rng, 1, 9));
        const Rational a(sepinv::testing::rand_int(rng, -9, 9));
        const RationalPoint w = flow_point(4, a, v);
        const OrbitVerdict verdict = same_orbit(4, v, w);
        REQUIRE(verdict.same_orbit);
        REQUIRE(flow_point(4, *verdict.translation, v) == w);
        REQUIRE(!decide_separated(E, v, w).separated);
    }
}

TEST_CASE("generated pairs by strategy") {
    for (int n = 2; n <= 5; ++n) {
        const SeparatingSetEvaluator E(n);
        for (const auto& [v, w] : generate_equivalent_pairs(n, PairStrategy::OrbitTranslate, 20, 5)) {
            REQUIRE(v[0] != 0);
            REQUIRE(!decide_separated(E, v, w).separated);
        }
        for (const auto& [v, w] : generate_equivalent_pairs(n, PairStrategy::NullCone, 20, 6)) {
            // Everything vanishes on the null cone.
            for (const auto& val : E.eval_all(v)) REQUIRE(val == 0);
            REQUIRE(!decide_separated(E, v, w).separated);
        }
    }
    // Flipped pairs on the deepest stratum are genuinely equivalent when
    // n = 2 mod 4: (0, t, *) vs (0, -t, *) and nothing tells them apart.
    for (int n : {2, 6}) {
        const SeparatingSetEvaluator E(n);
        for (const auto& [v, w] : generate_equivalent_pairs(n, PairStrategy::SignFlip, 15, 9)) {
            REQUIRE(v[static_cast<std::size_t>(n / 2)] == -w[static_cast<std::size_t>(n / 2)]);
            REQUIRE(!decide_separated(E, v, w).separated);
        }
    }
    REQUIRE_THROWS_AS(generate_equivalent_pairs(1, PairStrategy::SignFlip, 1, 0), std::invalid_argument);
}

TEST_CASE("null cone evaluations vanish in higher dimensions") {
    std::mt19937_64 rng(31);
    for (int n = 7; n <= 8; ++n) {
        const SeparatingSetEvaluator E(n);
        RationalPoint v(static_cast<std::size_t>(n + 1), Rational(0));
        for (int i = n / 2 + 1; i <= n; ++i)
            v[static_cast<std::size_t>(i)] = Rational(sepinv::testing::rand_int(rng, -9, 9));
        for (const auto& val : E.eval_all(v)) REQUIRE(val == 0);
    }
}

TEST_CASE("cross validation on a small run") {
    const CrossValidationReport report = cross_validate(2, 6, 50, 99);
    REQUIRE(report.ok());
    REQUIRE(report.batches.size() == 4);
    for (const auto& b : report.batches) REQUIRE(b.pairs == 50);
    // The biased strategies produce unseparated pairs; random pairs are
    // almost always separated.
    REQUIRE(report.batches[0].separated == 0);
    REQUIRE(report.batches[3].separated > 0);

    const CrossValidationReport r3 = cross_validate(3, 6, 20, 123);
    REQUIRE(r3.ok());
    REQUIRE_THROWS_AS(cross_validate(6, 3, 10, 0), std::invalid_argument);
}
