#include "doctest.h"
#include "oracles.hpp"

using namespace hdg;

TEST_CASE("small feasible and infeasible systems") {
    // x + 2y = 5, x <= 1  ->  x = 1, y = 2
    IlpSystem sys{2, {{{1, 2}, 5}}, {{{1, 0}, 1}}};
    const auto x = ilp_feasible(sys);
    REQUIRE(x);
    CHECK(*x == std::vector<int>{1, 2});
    // 2x = 3 has no integer solution.
    CHECK_FALSE(ilp_feasible(IlpSystem{1, {{{2}, 3}}, {}}));
    // No rows at all: the zero vector works.
    CHECK(ilp_feasible(IlpSystem{3, {}, {}}) == std::vector<int>{0, 0, 0});
    // A zero column never needs a positive value.
    CHECK(ilp_feasible(IlpSystem{2, {{{0, 3}, 6}}, {}}) == std::vector<int>{0, 2});
}

TEST_CASE("malformed systems are rejected") {
    CHECK_THROWS_AS(ilp_feasible(IlpSystem{2, {{{1}, 1}}, {}}), InvalidInput);
    CHECK_THROWS_AS(ilp_feasible(IlpSystem{1, {{{-1}, 1}}, {}}), InvalidInput);
    CHECK_THROWS_AS(ilp_feasible(IlpSystem{1, {}, {{{1}, -1}}}), InvalidInput);
}

TEST_CASE("agrees with box exhaustion on random systems and returns valid solutions") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 400; ++i) {
        const IlpSystem sys = test::random_ilp(rng);
        const auto x = ilp_feasible(sys);
        CHECK(x.has_value() == test::ilp_feasible_by_box(sys));
        if (x) CHECK(sys.satisfied_by(*x));
    }
}
