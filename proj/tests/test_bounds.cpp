#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "rankin/bounds.hpp"
#include "rankin/errors.hpp"
#include "rankin/family.hpp"
#include "test_support.hpp"

using rankin::Atom;
using rankin::classical_rankin_bound;
using rankin::counting_space;
using rankin::MeasureSpace;
using rankin::rankin_bound;

TEST_SUITE("bounds") {

TEST_CASE("classical bound formulas") {
    auto b = classical_rankin_bound(2);
    CHECK(b.coherence_bound == -1.0);
    CHECK(b.distance_bound == 4.0);

    b = classical_rankin_bound(4);
    CHECK(b.coherence_bound == -1.0 / 3.0);
    CHECK(b.distance_bound == doctest::Approx(8.0 / 3.0).epsilon(1e-15));

    b = classical_rankin_bound(10);
    CHECK(b.coherence_bound == -1.0 / 9.0);
    CHECK(b.distance_bound == doctest::Approx(20.0 / 9.0).epsilon(1e-15));

    CHECK_THROWS_AS(classical_rankin_bound(1), rankin::UndefinedError);
    CHECK_THROWS_AS(classical_rankin_bound(0), rankin::UndefinedError);
}

TEST_CASE("classical equals counting-measure continuous bound bit for bit") {
    for (std::size_t n = 2; n <= 60; ++n) {
        const auto classical = classical_rankin_bound(n);
        const auto continuous = rankin_bound(counting_space(n));
        CHECK(classical.coherence_bound == continuous.coherence_bound);
        CHECK(classical.distance_bound == continuous.distance_bound);
    }
}

TEST_CASE("weighted example (1,1,2)") {
    const MeasureSpace space({{"", 1}, {"", 1}, {"", 2}});
    const auto oracle = testsup::enumerate_masses({1, 1, 2});
    REQUIRE(oracle.diagonal == 6.0);
    REQUIRE(oracle.offdiagonal == 10.0);

    const auto b = rankin_bound(space);
    CHECK(b.coherence_bound == -0.6);
    CHECK(b.distance_bound == doctest::Approx(3.2).epsilon(1e-15));
    CHECK(b.diagonal_mass == 6.0);
    CHECK(b.offdiagonal_mass == 10.0);
}

TEST_CASE("bound report invariants") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 50;
        const auto space = testsup::random_space(rng, n);
        const auto b = rankin_bound(space);

        CHECK(b.distance_bound == 2.0 * (1.0 - b.coherence_bound));
        CHECK(b.coherence_bound < 0.0);
        if (b.offdiagonal_mass >= b.diagonal_mass) {
            CHECK(b.coherence_bound >= -1.0);
        } else {
            CHECK(b.coherence_bound < -1.0);
        }
    }
}

TEST_CASE("single atom has no bound") {
    CHECK_THROWS_AS(rankin_bound(counting_space(1)), rankin::UndefinedError);
    const MeasureSpace one({{"x", 2.5}});
    CHECK_THROWS_AS(rankin_bound(one), rankin::UndefinedError);
}

TEST_CASE("weight-scaling invariance") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 50;
        const auto space = testsup::random_space(rng, n);
        const auto base = rankin_bound(space);
        for (double c : {1e-3, 1.0, 1e3}) {
            std::vector<Atom> scaled;
            for (const auto& a : space.atoms()) scaled.push_back({a.label, c * a.weight});
            const auto b = rankin_bound(MeasureSpace{std::move(scaled)});
            CHECK(std::abs(b.coherence_bound - base.coherence_bound) <=
                  1e-14 * std::abs(base.coherence_bound));
        }
    }
}

TEST_CASE("equal-weight refinement is monotone toward zero") {
    double prev = -1.0;
    for (std::size_t n = 2; n <= 64; ++n) {
        const auto b = rankin_bound(counting_space(n));
        CHECK(b.coherence_bound == -1.0 / static_cast<double>(n - 1));
        if (n > 2) CHECK(b.coherence_bound > prev);
        prev = b.coherence_bound;
    }

    // discretizations carry equal weights, so the same exact values apply
    for (std::size_t n : {2ul, 8ul, 64ul}) {
        const auto fam = discretize(rankin::Shape::circle, n);
        const auto b = rankin_bound(fam.space());
        CHECK(b.coherence_bound == -1.0 / static_cast<double>(n - 1));
    }
}

TEST_CASE("bound depends only on the space, never the dimension") {
    std::mt19937_64 rng(44);
    const auto space = testsup::random_space(rng, 12);
    const auto b = rankin_bound(space);
    for (std::size_t d : {1ul, 3ul, 9ul}) {
        const auto fam = testsup::random_normalized_family(rng, 12, d);
        (void)fam;  // families of any d over the same space face the same bound
        const auto again = rankin_bound(space);
        CHECK(again.coherence_bound == b.coherence_bound);
        CHECK(again.distance_bound == b.distance_bound);
    }
}

}  // TEST_SUITE
