#include <random>

#include "doctest.h"
#include "hdg/brute.hpp"
#include "hdg/io.hpp"
#include "hdg/reductions.hpp"
#include "sgasp_audit.hpp"
#include "test_support.hpp"

using namespace hdg;

namespace {

bool stable_exists(const Reduction& r, Notion notion) { return solve_brute(r.instance, notion).has_value(); }

// Every stable outcome keeps the greens in desirable coalitions.
bool greens_always_satisfied(const Reduction& r, Notion notion) {
    bool ok = true;
    for_each_stable(r.instance, notion, [&](const Outcome& o) {
        ok = ok && r.greens_satisfied(o);
        return ok;
    });
    return ok;
}

// Assignment of every participant to an activity, by plain enumeration.
bool sgasp_by_enumeration(const SGaspInstance& in) {
    std::vector<int> pi(static_cast<std::size_t>(in.participants), 0);
    while (true) {
        if (is_gasp_solution(in, pi)) return true;
        int i = 0;
        while (i < in.participants && ++pi[static_cast<std::size_t>(i)] == in.activities) pi[static_cast<std::size_t>(i++)] = 0;
        if (i == in.participants) return false;
    }
}

}  // namespace

TEST_CASE("exact cover by 3-sets") {
    const X3CInput yes{3, {{0, 1, 2}}};
    const Reduction r = from_x3c(yes);
    CHECK(r.instance.n() == 6);
    CHECK(r.instance.gamma() == 6);
    CHECK(r.instance.budgets().sigma == 4);
    CHECK(r.instance.num_types() <= 4);
    CHECK(r.greens.size() == 1);
    for (Notion notion : {Notion::NS, Notion::IS}) {
        const auto o = solve_brute(r.instance, notion);
        REQUIRE(o);
        CHECK(decode_x3c(yes, r, *o) == std::vector<int>{0});
        CHECK(greens_always_satisfied(r, notion));
    }
    const Reduction no = from_x3c(X3CInput{3, {}});
    CHECK_FALSE(stable_exists(no, Notion::NS));
    CHECK_FALSE(stable_exists(no, Notion::IS));
    CHECK_FALSE(x3c_decide(X3CInput{3, {}}));
    CHECK_THROWS_AS(from_x3c(X3CInput{3, {{0, 1, 2}, {2, 1, 0}}}), InvalidInput);
    CHECK_THROWS_AS(from_x3c(X3CInput{4, {}}), InvalidInput);
    CHECK_THROWS_AS(from_x3c(X3CInput{3, {{0, 0, 1}}}), InvalidInput);
    CHECK_THROWS_AS(from_x3c(X3CInput{3, {{0, 1, 3}}}), InvalidInput);
}

TEST_CASE("exact cover decider") {
    const X3CInput in{6, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}}};
    CHECK(x3c_decide(in) == std::vector<int>{0, 2});
    CHECK(is_exact_cover(in, {0, 2}));
    CHECK_FALSE(is_exact_cover(in, {0, 1}));
}

TEST_CASE("partition") {
    for (Notion notion : {Notion::NS, Notion::IS}) {
        const Reduction yes = from_partition({1, 1}, notion);
        const auto o = solve_brute(yes.instance, notion);
        REQUIRE(o);
        const auto half = decode_partition({1, 1}, yes, *o);
        CHECK(half.size() == 1);
        CHECK_FALSE(stable_exists(from_partition({1, 3}, notion), notion));
    }
    CHECK(partition_decide({1, 2, 3}) == std::vector<int>{0, 1});
    CHECK_FALSE(partition_decide({1, 3}));
    CHECK_THROWS_AS(from_partition({1, 1, 1}, Notion::NS), InvalidInput);
    CHECK_THROWS_AS(from_partition({}, Notion::NS), InvalidInput);
    CHECK_THROWS_AS(from_partition({2, 0, 2}, Notion::NS), InvalidInput);
    const Reduction r = from_partition({1, 2, 3}, Notion::IS);
    CHECK(r.instance.num_types() == 4);
    CHECK(r.instance.budgets().rho1 == 3);
    CHECK(r.instance.budgets().rho2 == 3);
}

TEST_CASE("both greens in one coalition still decode to a valid half") {
    // {2,2}: greens may share one coalition holding both 2s.
    const std::vector<int> numbers{2, 2};
    const Reduction r = from_partition(numbers, Notion::NS);
    const AgentId g0 = r.greens[0], g1 = r.greens[1];
    const Outcome together({{0, 1, g0, g1}, {*r.red, *r.blue}}, r.instance.n());
    CHECK(r.greens_satisfied(together));
    const auto half = decode_partition(numbers, r, together);
    REQUIRE(half.size() == 1);
}

TEST_CASE("multidimensional subset sum with an optional pick per group") {
    const MssInput yes{{{{1}}}, {1}};
    const Reduction r = from_mss(yes);
    CHECK(r.instance.n() == 2);
    CHECK(r.instance.budgets().rho1 == 1);
    for (Notion notion : {Notion::NS, Notion::IS}) {
        const auto o = solve_brute(r.instance, notion);
        REQUIRE(o);
        CHECK(decode_mss(yes, r, *o) == std::vector<int>{0});
    }
    CHECK_FALSE(stable_exists(from_mss(MssInput{{{{2}}}, {1}}), Notion::NS));
    // Zero target: every marker stays alone.
    const MssInput zero{{{{1, 0}}, {{0, 1}}}, {0, 0}};
    CHECK(mss_decide(zero) == std::vector<int>{-1, -1});
    CHECK(stable_exists(from_mss(zero), Notion::NS));
    // One group has to pick nothing.
    const MssInput skip{{{{1}}, {{1}}}, {1}};
    CHECK(mss_decide(skip).has_value());
    const Reduction rs = from_mss(skip);
    const auto o = solve_brute(rs.instance, Notion::NS);
    REQUIRE(o);
    const auto choice = decode_mss(skip, rs, *o);
    CHECK(std::count(choice.begin(), choice.end(), -1) == 1);
    CHECK_THROWS_AS(from_mss(MssInput{{{{1, 2}}}, {1}}), InvalidInput);
    CHECK_THROWS_AS(from_mss(MssInput{{{{-1}}}, {1}}), InvalidInput);
}

TEST_CASE("independent set") {
    const IndSetInput path{3, {{0, 1}, {1, 2}}, 2};
    const Reduction r = from_independent_set(path);
    CHECK(r.instance.n() == 6);
    CHECK(r.instance.budgets().sigma == 3);
    CHECK(r.instance.num_types() <= 4);
    for (Notion notion : {Notion::NS, Notion::IS}) {
        const auto o = solve_brute(r.instance, notion);
        REQUIRE(o);
        CHECK(decode_independent_set(path, r, *o) == std::vector<int>{0, 2});
        CHECK(greens_always_satisfied(r, notion));
    }
    const IndSetInput triangle{3, {{0, 1}, {1, 2}, {0, 2}}, 2};
    CHECK_FALSE(stable_exists(from_independent_set(triangle), Notion::NS));
    CHECK_FALSE(stable_exists(from_independent_set(triangle), Notion::IS));
    CHECK(stable_exists(from_independent_set(IndSetInput{3, {{0, 1}, {1, 2}, {0, 2}}, 1}), Notion::NS));
    CHECK_THROWS_AS(from_independent_set(IndSetInput{2, {}, 3}), InvalidInput);
    CHECK_THROWS_AS(from_independent_set(IndSetInput{2, {{0, 0}}, 1}), InvalidInput);
    CHECK_THROWS_AS(from_independent_set(IndSetInput{2, {{0, 1}, {1, 0}}, 1}), InvalidInput);
}

TEST_CASE("activity selection normalization") {
    const SGaspInstance tiny{1, 1, {{{0, 1}}}, std::nullopt};
    const SGaspInstance norm = gasp_normalize(tiny);
    REQUIRE(norm.s);
    CHECK(*norm.s == 2);
    CHECK(norm.participants == 7);
    for (int p = 0; p < 5; ++p) CHECK(norm.approved[static_cast<std::size_t>(p)] == std::vector<std::pair<int, int>>{{0, 5}, {0, 7}});
    CHECK(norm.approved[5] == std::vector<std::pair<int, int>>{{0, 7}});
    CHECK(norm.approved[6] == std::vector<std::pair<int, int>>{{0, 7}});
    CHECK_THROWS_AS(gasp_normalize(SGaspInstance{1, 0, {{}}, std::nullopt}), InvalidInput);
}

TEST_CASE("normalization keeps the answer and only uses odd sizes in the window") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 150; ++i) {
        std::uniform_int_distribution<int> people(0, 3), acts(1, 2);
        SGaspInstance in;
        in.participants = people(rng);
        in.activities = acts(rng);
        std::bernoulli_distribution approve(0.4);
        for (int p = 0; p < in.participants; ++p) {
            std::vector<std::pair<int, int>> list;
            for (int a = 0; a < in.activities; ++a) {
                for (int t = 1; t <= in.participants; ++t) {
                    if (approve(rng)) list.emplace_back(a, t);
                }
            }
            in.approved.push_back(list);
        }
        const bool answer = sgasp_by_enumeration(in);
        const auto direct = sgasp_decide(in);
        CHECK(direct.has_value() == answer);
        if (direct) CHECK(is_gasp_solution(in, *direct));
        const SGaspInstance norm = gasp_normalize(in);
        const int s = in.participants + 1;
        for (const auto& list : norm.approved) {
            for (auto [a, t] : list) {
                CHECK(t % 2 == 1);
                CHECK(t >= 2 * s * in.activities + 1);
                CHECK(t <= 2 * s * in.activities + 2 * s - 1);
            }
        }
        for (int a = 0; a < in.activities; ++a) {
            int approving = 0;
            for (const auto& list : norm.approved) {
                approving += std::any_of(list.begin(), list.end(), [&](const auto& at) { return at.first == a; });
            }
            CHECK(approving <= 2 * s * in.activities + 2 * s - 1);
        }
        CHECK(sgasp_decide(norm).has_value() == answer);
    }
}

TEST_CASE("two-color construction for one activity") {
    const SGaspInstance in = gasp_normalize(SGaspInstance{1, 1, {{{0, 1}}}, std::nullopt});
    const Instance inst = from_sgasp(in, true);
    const SGaspLayout layout = SGaspLayout::of(1, *in.s);
    CHECK(layout.z == std::vector<int>{101});
    CHECK(layout.spoilers == 80001);
    CHECK(inst.n() == 7 + 101 + 80001);
    CHECK(test::audit_sgasp(in, inst).empty());
    // Normalizing internally gives the same instance.
    CHECK(serialize_instance(from_sgasp(SGaspInstance{1, 1, {{{0, 1}}}, std::nullopt}, false)) == serialize_instance(inst));
    // Inputs claimed to be normalized are checked.
    CHECK_THROWS_AS(from_sgasp(SGaspInstance{1, 1, {{{0, 1}}}, 2}, true), InvalidInput);
    // Blue-up-to-1 ratios: 1/2 qualifies, 2/3 does not.
    const PreferenceOrder& spoiler = inst.pref(inst.type_of(inst.n() - 1));
    CHECK(spoiler.rank(test::pal({1, 1})) > spoiler.rank(test::pal({2, 1})));
}

TEST_CASE("audit catches a tampered construction") {
    const SGaspInstance in = gasp_normalize(SGaspInstance{1, 1, {{{0, 1}}}, std::nullopt});
    Instance inst = from_sgasp(in, true);
    std::vector<PreferenceOrder> prefs = inst.prefs();
    prefs[0] = PreferenceOrder::tier_list(2, {{test::pal({101, 9})}, {test::pal({0, 1})}});
    const Instance tampered(2, inst.colors(), inst.types(), prefs);
    CHECK_FALSE(test::audit_sgasp(in, tampered).empty());
}

TEST_CASE("generated instances round-trip through the file format") {
    const std::vector<Reduction> reductions{
        from_x3c(X3CInput{3, {{0, 1, 2}}}),
        from_partition({1, 2, 3}, Notion::IS),
        from_mss(MssInput{{{{1, 0}, {0, 2}}, {}}, {1, 2}}),
        from_independent_set(IndSetInput{4, {{0, 1}, {2, 3}}, 2}),
    };
    for (const auto& r : reductions) {
        const std::string text = serialize_instance(r.instance);
        const Instance back = parse_instance(text);
        CHECK(serialize_instance(back) == text);
        for (Notion notion : {Notion::NS, Notion::IS}) {
            CHECK(solve_brute(back, notion).has_value() == solve_brute(r.instance, notion).has_value());
        }
    }
}
