#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/distance.hpp"
#include "lrc/search.hpp"
#include "support.hpp"

using namespace lrc;

TEST_CASE("exact distance of small codes") {
    auto c6 = build_code(testsupport::desk6());
    auto r6 = min_distance_exact(c6);
    CHECK(r6.exact);
    CHECK(r6.lower == 4);
    CHECK(r6.upper == 4);
    CHECK(r6.method == DistanceMethod::Exhaustive);
    CHECK(r6.evaluations == 8);  // (7^2 - 1) / 6 lines through the origin

    auto c2 = build_code(testsupport::example2());
    CHECK(min_distance_exact(c2).lower == 8);

    const auto& row = table1_printed()[1];
    REQUIRE(row.n == 15);
    auto c15 = build_code(table1_params(row));
    REQUIRE(c15.dimension() == 4);
    auto r15 = min_distance_exact(c15);
    CHECK(r15.exact);
    CHECK(r15.lower == 11);
}

TEST_CASE("repetition-like code has the weight of its generator") {
    auto f = gf::field_new(11, 1);
    CyclicLRC c(f, DefiningSet(5, {1, 2, 3, 4}));
    REQUIRE(c.dimension() == 1);
    int wt = 0;
    for (auto x : c.generator_poly().coeffs()) wt += x.value != 0;
    CHECK(min_distance_exact(c).lower == wt);
    CHECK(wt == 5);
}

TEST_CASE("zero code reports n + 1") {
    auto f = gf::field_new(7, 1);
    CyclicLRC c(f, DefiningSet(3, {0, 1, 2}));
    auto r = min_distance_exact(c);
    CHECK(r.lower == 4);
    CHECK(r.upper == 4);
    CHECK(min_weight_enumerate(Matrix(f, 0, 3)) == 4);
}

TEST_CASE("exact distance falls back to a bracket beyond the budget") {
    auto c1 = build_code(testsupport::example1());
    auto r = min_distance_exact(c1, 1000);
    CHECK_FALSE(r.exact);
    CHECK(r.method == DistanceMethod::Sampled);
    CHECK(r.lower == 7);
    CHECK(r.upper >= 7);
    CHECK(r.upper <= 8);
}

TEST_CASE("bracket of the first worked example") {
    auto c1 = build_code(testsupport::example1());
    auto r = min_distance_bracket(c1, 100000, 1);
    CHECK(r.lower == 7);
    CHECK(r.upper <= 8);
    CHECK_FALSE(r.exact);
    CHECK(r.evaluations == 100000 + 6);
}

TEST_CASE("bracket is deterministic per seed") {
    auto c = build_code(testsupport::example2());
    CHECK(min_distance_bracket(c, 1, 42) == min_distance_bracket(c, 1, 42));
    CHECK(min_distance_bracket(c, 500, 7) == min_distance_bracket(c, 500, 7));
}

TEST_CASE("message space size saturates") {
    CHECK(message_space_size(16, 6) == 16777216ULL);
    CHECK(message_space_size(2, 64) == UINT64_MAX);
    CHECK(message_space_size(1000, 10) == UINT64_MAX);
    CHECK(message_space_size(7, 0) == 1);
}

TEST_CASE("exact distance sits between the lower and upper bounds") {
    std::mt19937 rng(606);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 25; ++trial) {
        auto p = testsupport::random_params(rng, 40);
        auto c = build_code(p);
        if (c.is_zero_code() || message_space_size(c.field()->order(), c.dimension()) > 200000) continue;
        ++checked;
        CAPTURE(p.length());
        const auto r = min_distance_exact(c);
        REQUIRE(r.exact);
        const auto& d = c.defining_set();
        CHECK(r.lower >= bch_bound(d).bound);
        CHECK(r.lower >= ht_bound(d).bound);
        CHECK(r.lower >= product_distance_bound(p));
        for (std::size_t i = 0; i < p.t(); ++i)
            CHECK(r.lower <= singleton_like(c.length(), c.dimension(), p.locality(i), p.rhos[i]));
        const auto b = min_distance_bracket(c, 200, static_cast<std::uint64_t>(trial));
        CHECK(b.lower <= r.lower);
        CHECK(b.upper >= r.lower);
    }
    CHECK(checked >= 10);
}

TEST_CASE("exact distance agrees with naive enumeration") {
    std::mt19937 rng(808);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 20; ++trial) {
        auto p = testsupport::random_params(rng, 30);
        if (std::bernoulli_distribution(0.5)(rng)) p.global = {std::uniform_int_distribution<int>(0, p.length() - 1)(rng)};
        auto c = build_code(p);
        if (c.is_zero_code() || message_space_size(c.field()->order(), c.dimension()) > 10000) continue;
        ++checked;
        CHECK(min_distance_exact(c).lower == testsupport::naive_min_distance(c));
    }
    CHECK(checked >= 10);
}
