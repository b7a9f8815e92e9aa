#pragma once

// Structural audit of the two-color activity-selection construction. Every
// expected quantity is recomputed here from the input, without going through
// the generator's own helpers.

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "hdg/families.hpp"
#include "hdg/reductions.hpp"

namespace hdg::test {

inline std::pair<int, int> reduced(long long r, long long b) {
    const long long g = std::gcd(r, b);
    return {static_cast<int>(r / g), static_cast<int>(b / g)};
}

inline std::set<std::pair<int, int>> tier_set(const PreferenceOrder& order, std::size_t tier) {
    std::set<std::pair<int, int>> out;
    for (const Palette& p : order.tiers().at(tier)) out.emplace(p.count(0), p.count(1));
    return out;
}

/// Random small input passed through normalization.
inline SGaspInstance random_normalized_sgasp(std::mt19937_64& rng, int activities) {
    std::uniform_int_distribution<int> people(1, 3), act(0, activities - 1), many(0, 3);
    SGaspInstance in;
    in.activities = activities;
    in.participants = people(rng);
    std::uniform_int_distribution<int> size(1, in.participants);
    for (int p = 0; p < in.participants; ++p) {
        std::set<std::pair<int, int>> approvals;
        for (int k = many(rng); k > 0; --k) approvals.emplace(act(rng), size(rng));
        in.approved.emplace_back(approvals.begin(), approvals.end());
    }
    return gasp_normalize(in);
}

/// Empty string on success, otherwise the first discrepancy found.
inline std::string audit_sgasp(const SGaspInstance& in, const Instance& inst) {
    const int na = in.activities;
    const int s = *in.s;
    const int lo = 2 * s * na + 1;
    const int hi = 2 * s * (na + 1) - 1;
    const long long spoilers = 400LL * na * na * 200LL * na * na + 1;
    if (inst.gamma() != 2) return "expected two colors";

    // Agents appear as normals, then markers per activity, then spoilers.
    long long expected_n = in.participants + spoilers;
    for (int i = 1; i <= na; ++i) expected_n += 100 * i + 1;
    if (inst.n() != expected_n) return "agent count " + std::to_string(inst.n()) + ", expected " + std::to_string(expected_n);

    AgentId a = 0;
    for (int p = 0; p < in.participants; ++p, ++a) {
        if (inst.color_of(a) != 1) return "normal agent is not blue";
        std::set<std::pair<int, int>> want;
        for (auto [act, t] : in.approved[static_cast<std::size_t>(p)]) want.insert(reduced(100LL * (act + 1) + 1, t));
        const PreferenceOrder& order = inst.pref(inst.type_of(a));
        if (order.tiers().size() != 2) return "normal agent needs two tiers";
        if (tier_set(order, 0) != want) return "normal agent " + std::to_string(p) + " has the wrong approved ratios";
        if (tier_set(order, 1) != std::set<std::pair<int, int>>{{0, 1}}) return "normal agent's second tier is not all-blue";
    }
    for (int i = 1; i <= na; ++i) {
        const int z = 100 * i + 1;
        std::set<std::pair<int, int>> want;
        for (int t = lo; t <= hi; t += 2) want.insert(reduced(z, t));
        for (int k = 0; k < z; ++k, ++a) {
            if (inst.color_of(a) != 0) return "marker agent is not red";
            if (k > 0 && inst.type_of(a) != inst.type_of(a - 1)) return "markers of one activity differ in type";
            const PreferenceOrder& order = inst.pref(inst.type_of(a));
            if (k == 0 && (tier_set(order, 0) != want || tier_set(order, 1) != std::set<std::pair<int, int>>{{1, 0}})) {
                return "marker tiers of activity " + std::to_string(i) + " are wrong";
            }
        }
    }

    // Small-split ratios by direct search over red counts r: the blue count
    // b solves r * t = b * z when that is integral.
    std::set<std::pair<int, int>> split;
    std::vector<int> z, cap;
    for (int i = 1; i <= na; ++i) {
        z.push_back(100 * i + 1);
        cap.push_back(75 * i + 1);
        for (int t = lo; t <= hi; t += 2) {
            for (long long r = 1; r <= 75 * i + 1; ++r) {
                if (r * t % (100 * i + 1) != 0) continue;
                split.insert(reduced(r + 1, r * t / (100 * i + 1)));
            }
        }
    }
    if (spoiler_split_ratios(z, cap, lo, hi) != split) return "spoiler split ratios differ";
    const TypeId spoiler_type = inst.type_of(a);
    for (long long k = 0; k < spoilers; ++k, ++a) {
        if (inst.color_of(a) != 0 || inst.type_of(a) != spoiler_type) return "spoiler agents are not uniform";
    }
    const PreferenceOrder& sp = inst.pref(spoiler_type);
    auto rank = [&](int r, int b) { return sp.rank(Palette::from_counts(std::vector<int>{r, b})); };
    // Blue-up-to-1 ratios beat small splits, which beat all-red, which beats the rest.
    const int up_to_one = rank(1, 1);
    if (rank(1, 7) != up_to_one) return "blue-up-to-1 ratios are not one tier";
    if (rank(1, 0) >= up_to_one) return "all-red ranks too high for spoilers";
    for (auto [r, b] : split) {
        if (r == 1) continue;
        if (!(rank(r, b) < up_to_one && rank(r, b) > rank(1, 0))) return "split ratio ranked outside its tier";
    }
    if (!split.count(reduced(2, 1)) && rank(2, 1) > rank(1, 0)) return "ratio 2/3 is ranked above all-red";
    return "";
}

}  // namespace hdg::test
