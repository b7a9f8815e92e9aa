#include "doctest.h"
#include "hdg/io.hpp"
#include "hdg/ownhdg.hpp"
#include "solver_support.hpp"
#include "test_support.hpp"

using namespace hdg;
using namespace hdg::test;

namespace {

PreferenceOrder own(ColorId c, Json tiers, int gamma) {
    return PreferenceOrder::named("own-ratio", Json{{"color", c}, {"tiers", std::move(tiers)}}, gamma);
}

}  // namespace

TEST_CASE("agents that like being alone best are stable as singletons") {
    const Instance inst(2, {0, 0, 1}, {0, 0, 1}, {own(0, {{{1, 1}}}, 2), own(1, {{{1, 1}}}, 2)});
    const auto o = solve_ownhdg_nash(inst);
    REQUIRE(o);
    CHECK(o->size() == 3);
}

TEST_CASE("arcs for an empty color class only keep the allocation") {
    // Color 1 has no agents.
    const Instance inst(2, {0, 0}, {0, 0}, {own(0, {{{1, 2}}}, 2)});
    const Record from{1, {1}, 0};
    const auto stay = arc_exists(inst, from, {1}, {2}, SingletonProfile{});
    REQUIRE(stay);
    CHECK(stay->agents.empty());
    CHECK_FALSE(arc_exists(inst, from, {2}, {2}, SingletonProfile{}));
}

TEST_CASE("agents that top-prefer their own color alone go alone unless tempted") {
    const Instance inst(2, {0, 0, 1, 1}, {0, 0, 1, 1}, {own(0, {{{1, 1}}}, 2), own(1, {{{1, 2}}}, 2)});
    const Record start{0, {0}, 0};
    const auto alone = arc_exists(inst, start, {0}, {2}, SingletonProfile{});
    REQUIRE(alone);
    CHECK(alone->slot == std::vector<int>{0, 0});
    // Putting one of them into a size-2 coalition gives share 1/2, which they do not like.
    CHECK_FALSE(arc_exists(inst, start, {1}, {2}, SingletonProfile{}));
}

TEST_CASE("a lone agent of another color can tempt") {
    // Color-0 agents like share 1/2 best and sit alone; a lone color-1 agent
    // would give them exactly that.
    const Instance inst(2, {0, 1}, {0, 1}, {own(0, {{{1, 2}}, {{1, 1}}}, 2), own(1, {{{1, 1}}}, 2)});
    const Record start{0, {}, 0};
    CHECK(arc_exists(inst, start, {}, {}, SingletonProfile{}));
    CHECK_FALSE(arc_exists(inst, start, {}, {}, SingletonProfile{SingletonProfile::Kind::OneColor, 1}));
    CHECK(arc_exists(inst, start, {}, {}, SingletonProfile{SingletonProfile::Kind::OneColor, 0}));
}

TEST_CASE("an instance that needs two non-trivial coalitions") {
    // Found by brute-force search over small own-color instances.
    const Instance inst = parse_instance(R"({"agents": [{"color": 1, "id": 0, "type": 0}, {"color": 2, "id": 1, "type": 1},
        {"color": 0, "id": 2, "type": 2}, {"color": 1, "id": 3, "type": 0}, {"color": 1, "id": 4, "type": 0}],
        "gamma": 3, "n": 5, "rho1": 5, "rho2": 2, "sigma": 5, "types": [
        {"family": "own-ratio", "params": {"color": 1, "tiers": [[[1, 3]], [[2, 3], [1, 2]], [[1, 1], [1, 5]], [[2, 5]]]}},
        {"family": "own-ratio", "params": {"color": 2, "tiers": [[[4, 5], [2, 5], [3, 4], [1, 3], [2, 3]]]}},
        {"family": "own-ratio", "params": {"color": 0, "tiers": [[[3, 4], [2, 3], [1, 2]], [[3, 5], [1, 3]]]}}]})");
    REQUIRE(is_own_color(inst));
    const auto two = solve_ownhdg_nash(inst);
    REQUIRE(two);
    CHECK(two->nontrivial_count() == 2);
    CHECK(check_outcome(inst, *two, Notion::NS).stable());
    CHECK_FALSE(solve_ownhdg_nash(inst.with_budgets(Budgets{5, 5, 1})));
    CHECK_FALSE(solve_brute(inst.with_budgets(Budgets{5, 5, 1}), Notion::NS));
}

TEST_CASE("instances that are not own-color are refused") {
    const auto mixed = PreferenceOrder::tier_list(3, {{pal({1, 1, 0})}});
    const Instance inst(3, {0, 1, 2}, {0, 0, 0}, {mixed});
    CHECK_THROWS_AS(solve_ownhdg_nash(inst), OwnColorViolation);
}

TEST_CASE("own-nash agrees with brute force on own-color instances") {
    agrees_with_brute([](const Instance& i, Notion) { return solve_ownhdg_nash(i); }, 405, 150, true, {Notion::NS});
}
