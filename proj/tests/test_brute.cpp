#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hdg/brute.hpp"
#include "hdg/random_instances.hpp"
#include "test_support.hpp"

using namespace hdg;
using namespace hdg::test;

namespace {

using ClassPartition = std::multiset<std::multiset<std::pair<ColorId, TypeId>>>;

ClassPartition by_class(const Instance& inst, const Outcome& o) {
    ClassPartition out;
    for (const auto& c : o.coalitions()) {
        std::multiset<std::pair<ColorId, TypeId>> m;
        for (AgentId a : c) m.emplace(inst.color_of(a), inst.type_of(a));
        out.insert(m);
    }
    return out;
}

// Every labelling of agents with block ids, reduced to partitions up to
// swapping interchangeable agents. Independent of the growth-string search.
std::set<ClassPartition> partitions_by_labelling(const Instance& inst) {
    const int n = inst.n();
    std::set<ClassPartition> out;
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    while (true) {
        std::map<int, std::vector<AgentId>> blocks;
        for (AgentId a = 0; a < n; ++a) blocks[label[static_cast<std::size_t>(a)]].push_back(a);
        std::vector<std::vector<AgentId>> cs;
        for (auto& [k, v] : blocks) cs.push_back(v);
        const Outcome o(cs, n);
        if (!budget_violation(inst.budgets(), o)) out.insert(by_class(inst, o));
        int i = 0;
        while (i < n && ++label[static_cast<std::size_t>(i)] == n) label[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return out;
}

Instance distinct_agents(int n, Budgets b) {
    std::vector<PreferenceOrder> prefs;
    std::vector<ColorId> colors;
    std::vector<TypeId> types;
    for (int i = 0; i < n; ++i) {
        prefs.push_back(PreferenceOrder::tier_list(1, {}));
        colors.push_back(0);
        types.push_back(i);
    }
    return Instance(1, colors, types, prefs, b);
}

}  // namespace

TEST_CASE("unrestricted enumeration of distinct agents yields the Bell numbers") {
    // Bell numbers via the Bell triangle, computed independently here.
    std::vector<long long> bell{1};
    std::vector<long long> row{1};
    for (int i = 1; i <= 7; ++i) {
        std::vector<long long> next{row.back()};
        for (long long x : row) next.push_back(next.back() + x);
        bell.push_back(row.back());
        row = next;
    }
    for (int n = 1; n <= 7; ++n) {
        long long count = 0;
        for_each_budget_partition(distinct_agents(n, Budgets::unrestricted(n)), [&](const Outcome&) {
            ++count;
            return true;
        });
        CHECK(count == bell[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("budgeted enumeration matches labelling enumeration up to symmetry") {
    std::mt19937_64 rng(3);
    RandomCaps caps;
    caps.max_n = 6;
    for (int i = 0; i < 120; ++i) {
        const Instance inst = random_instance(rng, caps);
        std::set<ClassPartition> seen;
        std::set<std::vector<std::vector<AgentId>>> labelled;
        for_each_budget_partition(inst, [&](const Outcome& o) {
            CHECK_FALSE(budget_violation(inst.budgets(), o));
            CHECK(labelled.insert(o.canonical().coalitions()).second);
            seen.insert(by_class(inst, o));
            return true;
        });
        CHECK(seen == partitions_by_labelling(inst));
    }
}

TEST_CASE("brute force finds the example's stable outcomes") {
    const Instance inst = example1();
    for (Notion notion : {Notion::NS, Notion::IS}) {
        const auto o = solve_brute(inst, notion);
        REQUIRE(o);
        CHECK(check_outcome(inst, *o, notion).stable());
    }
    bool found_nash_witness = false;
    for_each_stable(inst, Notion::NS, [&](const Outcome& o) {
        found_nash_witness |= o.canonical() == Outcome({{A}, {B, C, D}}, 4);
        return true;
    });
    CHECK(found_nash_witness);
}

TEST_CASE("an instance without any stable outcome") {
    // a wants to be with b, b wants to be alone, and that is all: under NS,
    // {a},{b} lets a join b, {a,b} lets b leave.
    const auto likes_b = PreferenceOrder::tier_list(2, {{pal({1, 1})}});
    const auto alone = PreferenceOrder::tier_list(2, {{pal({0, 1})}});
    const Instance inst(2, {0, 1}, {0, 1}, {likes_b, alone});
    CHECK_FALSE(solve_brute(inst, Notion::NS));
    CHECK(solve_brute(inst, Notion::IS));  // b refuses a
    CHECK_FALSE(solve_brute_positions(inst, Notion::NS));
}

TEST_CASE("position branching agrees with growth-string enumeration") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const Instance inst = random_instance(rng);
        for (Notion notion : {Notion::NS, Notion::IS}) {
            const auto a = solve_brute(inst, notion);
            const auto b = solve_brute_positions(inst, notion);
            CHECK(a.has_value() == b.has_value());
            if (b) CHECK(check_outcome(inst, *b, notion).stable());
        }
    }
}

TEST_CASE("explosion guards") {
    SearchLimits tiny;
    tiny.brute_max_n = 3;
    CHECK_THROWS_AS(solve_brute(example1(), Notion::NS, tiny), InstanceTooLarge);
    SearchLimits few;
    few.max_states = 3;
    CHECK_THROWS_AS(solve_brute(example1(), Notion::NS, few), SearchSpaceTooLarge);
    SearchLimits narrow;
    narrow.positions_max = 1;
    CHECK_THROWS_AS(solve_brute_positions(example1(), Notion::NS, narrow), InstanceTooLarge);
}
