#include "hdg/colors_types.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hdg {

namespace {

int level_of(const Instance& inst, const CoalitionTypes& ct, std::size_t p, const Palette& pal) {
    return inst.pref(ct.pairs[p].second).rank(pal);
}

bool below_second(const Instance& inst, const CoalitionTypes& ct, const CoalitionType& cand, std::size_t p,
                  const WorstLevels& lv) {
    return cand.counts[p] > 0 && level_of(inst, ct, p, cand.palette) < lv.second[p];
}

// Whether pair p is kept out of `cand`: nobody of that pair elsewhere wants in.
bool guarded_against(const Instance& inst, const CoalitionTypes& ct, const CoalitionType& cand, std::size_t p,
                     const WorstLevels& lv, Notion notion) {
    if (cand.counts[p] == ct.available[p]) return true;
    const Palette joined = cand.composition.plus(ct.pairs[p].first).palette();
    const int joined_level = level_of(inst, ct, p, joined);
    if (below_second(inst, ct, cand, p, lv) ? joined_level <= lv.second[p] : joined_level <= lv.worst[p]) return true;
    if (notion == Notion::IS) {
        for (std::size_t q = 0; q < ct.pairs.size(); ++q) {
            if (cand.counts[q] > 0 && level_of(inst, ct, q, joined) < level_of(inst, ct, q, cand.palette)) return true;
        }
    }
    return false;
}

bool admissible_for(const Instance& inst, const CoalitionTypes& ct, const CoalitionType& cand, std::size_t p,
                    const WorstLevels& lv, Notion notion) {
    if (cand.counts[p] > 0 && level_of(inst, ct, p, cand.palette) < lv.worst[p]) return false;
    return guarded_against(inst, ct, cand, p, lv, notion);
}

}  // namespace

bool candidate_admissible(const Instance& inst, const CoalitionTypes& ct, const CoalitionType& cand,
                          const WorstLevels& levels, Notion notion) {
    if (cand.size > inst.budgets().sigma) return false;
    for (std::size_t p = 0; p < ct.pairs.size(); ++p) {
        if (!admissible_for(inst, ct, cand, p, levels, notion)) return false;
    }
    return true;
}

bool coalition_compatible(const Instance& inst, const CoalitionTypes& ct, const CoalitionType& cand,
                          const Pattern& pattern, const WorstLevels& levels, Notion notion) {
    const Budgets& b = inst.budgets();
    if (pattern.coalitions + 1 > b.rho1) return false;
    if (pattern.nontrivial + (cand.size >= 2 ? 1 : 0) > b.rho2) return false;
    for (std::size_t p = 0; p < ct.pairs.size(); ++p) {
        if (pattern.used[p] + cand.counts[p] > ct.available[p]) return false;
        if (pattern.flagged[p] && below_second(inst, ct, cand, p, levels)) return false;
    }
    return candidate_admissible(inst, ct, cand, levels, notion);
}

std::optional<Outcome> solve_colors_types(const Instance& inst, Notion notion, const SearchLimits& limits) {
    const CoalitionTypes ct = enumerate_coalition_types(inst, limits);
    const std::size_t P = ct.pairs.size();
    SearchCounter counter(limits.max_states, "worst-level branching");

    // Candidate levels per pair: ranks of realizable coalitions holding the
    // pair that are not worse than being alone.
    std::vector<std::vector<int>> options(P);
    for (std::size_t p = 0; p < P; ++p) {
        const int alone = level_of(inst, ct, p, Palette::unit(inst.gamma(), ct.pairs[p].first));
        std::set<int> lv;
        for (const auto& cand : ct.types) {
            if (cand.counts[p] == 0) continue;
            const int l = level_of(inst, ct, p, cand.palette);
            if (l >= alone) lv.insert(l);
        }
        options[p].assign(lv.begin(), lv.end());
    }

    WorstLevels levels{std::vector<int>(P, 0), std::vector<int>(P, 0)};
    std::optional<Outcome> found;

    // Relaxed check on the pairs fixed so far: each must still have some
    // candidate holding it that passes every fixed pair's conditions.
    auto feasible_prefix = [&](std::size_t fixed) {
        for (std::size_t p = 0; p < fixed; ++p) {
            bool any = false;
            for (const auto& cand : ct.types) {
                if (cand.counts[p] == 0) continue;
                bool ok = true;
                for (std::size_t q = 0; q < fixed && ok; ++q) ok = admissible_for(inst, ct, cand, q, levels, notion);
                if (ok) {
                    any = true;
                    break;
                }
            }
            if (!any) return false;
        }
        return true;
    };

    auto run_dp = [&]() -> std::optional<Outcome> {
        std::vector<std::size_t> good;
        for (std::size_t i = 0; i < ct.types.size(); ++i) {
            if (candidate_admissible(inst, ct, ct.types[i], levels, notion)) good.push_back(i);
        }
        using Key = std::tuple<std::vector<int>, std::vector<std::uint8_t>, int>;
        struct Back {
            Key parent;
            std::size_t cand;
        };
        std::map<Key, Back> seen;
        Pattern zero{std::vector<int>(P, 0), std::vector<std::uint8_t>(P, 0), 0, 0};
        std::vector<Pattern> layer{zero};
        seen.emplace(Key{zero.used, zero.flagged, 0}, Back{{}, 0});
        auto is_target = [&](const Pattern& pt) { return pt.used == ct.available; };
        const Pattern* target = nullptr;
        if (is_target(zero)) target = &layer.front();
        while (!target && !layer.empty()) {
            std::vector<Pattern> next;
            for (const Pattern& pt : layer) {
                for (std::size_t i : good) {
                    counter.tick();
                    const CoalitionType& cand = ct.types[i];
                    if (!coalition_compatible(inst, ct, cand, pt, levels, notion)) continue;
                    Pattern nx = pt;
                    for (std::size_t p = 0; p < P; ++p) {
                        nx.used[p] += cand.counts[p];
                        nx.flagged[p] |= below_second(inst, ct, cand, p, levels) ? 1 : 0;
                    }
                    nx.nontrivial += cand.size >= 2 ? 1 : 0;
                    nx.coalitions += 1;
                    Key k{nx.used, nx.flagged, nx.nontrivial};
                    if (!seen.emplace(k, Back{Key{pt.used, pt.flagged, pt.nontrivial}, i}).second) continue;
                    next.push_back(std::move(nx));
                    if (is_target(next.back())) break;
                }
                if (!next.empty() && is_target(next.back())) break;
            }
            layer = std::move(next);
            if (!layer.empty() && is_target(layer.back())) target = &layer.back();
        }
        if (!target) return std::nullopt;

        std::vector<std::vector<AgentId>> pools(P);
        for (std::size_t p = 0; p < P; ++p) pools[p] = inst.agents_of(ct.pairs[p].first, ct.pairs[p].second);
        std::vector<std::vector<AgentId>> coalitions;
        Key k{target->used, target->flagged, target->nontrivial};
        while (std::get<2>(k) != 0 || std::any_of(std::get<0>(k).begin(), std::get<0>(k).end(), [](int v) { return v; })) {
            const Back& back = seen.at(k);
            const CoalitionType& cand = ct.types[back.cand];
            std::vector<AgentId> members;
            for (std::size_t p = 0; p < P; ++p) {
                for (int r = 0; r < cand.counts[p]; ++r) {
                    members.push_back(pools[p].back());
                    pools[p].pop_back();
                }
            }
            coalitions.push_back(std::move(members));
            k = back.parent;
        }
        return Outcome(std::move(coalitions), inst.n()).canonical();
    };

    auto branch = [&](auto&& self, std::size_t p) -> bool {
        counter.tick();
        if (!feasible_prefix(p)) return false;
        if (p == P) {
            found = run_dp();
            return found.has_value();
        }
        for (std::size_t i = 0; i < options[p].size(); ++i) {
            levels.worst[p] = options[p][i];
            // A lone agent of its pair never meets a second coalition holding it.
            const std::size_t last = ct.available[p] == 1 ? i + 1 : options[p].size();
            for (std::size_t j = i; j < last; ++j) {
                levels.second[p] = options[p][j];
                if (self(self, p + 1)) return true;
            }
        }
        return false;
    };
    branch(branch, 0);
    return found;
}

}  // namespace hdg
