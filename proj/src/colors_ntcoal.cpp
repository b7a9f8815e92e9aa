#include "hdg/colors_ntcoal.hpp"

#include <algorithm>
#include <map>

#include "hdg/maxflow.hpp"

namespace hdg {

NtGuess NtGuess::open(const Instance& inst, std::vector<Composition> comps) {
    NtGuess g;
    const int gamma = inst.gamma();
    g.trivial = inst.class_sizes();
    for (const auto& comp : comps) {
        for (ColorId c = 0; c < gamma; ++c) g.trivial[static_cast<std::size_t>(c)] -= comp.count(c);
    }
    for (int v : g.trivial) {
        if (v < 0) throw InvalidInput("guessed compositions overdraw a color class");
    }
    g.blocked.assign(static_cast<std::size_t>(gamma), std::vector<bool>(static_cast<std::size_t>(gamma), false));
    g.blocker.assign(comps.size(), std::vector<int>(static_cast<std::size_t>(gamma), kAccepted));
    g.comps = std::move(comps);
    return g;
}

namespace {

Palette pair_palette(int gamma, ColorId a, ColorId b) {
    Composition comp(gamma);
    comp.add(a);
    comp.add(b);
    return comp.palette();
}

Palette slot_palette(const Instance& inst, int slot, const NtGuess& g, ColorId c) {
    return slot == NtGuess::kTrivial ? Palette::unit(inst.gamma(), c) : g.comps[static_cast<std::size_t>(slot)].palette();
}

bool slot_has(const NtGuess& g, int slot, ColorId c) {
    return slot == NtGuess::kTrivial ? g.trivial[static_cast<std::size_t>(c)] > 0
                                     : g.comps[static_cast<std::size_t>(slot)].count(c) > 0;
}

}  // namespace

bool class_valid_for(const Instance& inst, ColorId c, TypeId t, int slot, const NtGuess& g, Notion notion) {
    if (!slot_has(g, slot, c)) return false;
    const PreferenceOrder& pref = inst.pref(t);
    const int gamma = inst.gamma();
    const int own = pref.rank(slot_palette(inst, slot, g, c));
    if (pref.rank(Palette::unit(gamma, c)) > own) return false;
    for (std::size_t j = 0; j < g.comps.size(); ++j) {
        if (static_cast<int>(j) == slot) continue;
        if (notion == Notion::IS && g.blocker[j][static_cast<std::size_t>(c)] != NtGuess::kAccepted) continue;
        if (pref.rank(g.comps[j].plus(c).palette()) > own) return false;
    }
    for (ColorId d = 0; d < gamma; ++d) {
        if (g.trivial[static_cast<std::size_t>(d)] == 0 || d == c) continue;
        if (notion == Notion::IS && g.blocked[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)]) continue;
        if (pref.rank(pair_palette(gamma, c, d)) > own) return false;
    }
    if (notion == Notion::IS && slot == NtGuess::kTrivial) {
        for (ColorId d = 0; d < gamma; ++d) {
            if (g.blocked[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] &&
                pref.rank(pair_palette(gamma, c, d)) >= own) {
                return false;
            }
        }
    }
    return true;
}

bool is_valid_for(const Instance& inst, AgentId agent, int slot, const NtGuess& guess, Notion notion) {
    return class_valid_for(inst, inst.color_of(agent), inst.type_of(agent), slot, guess, notion);
}

std::optional<Outcome> assign_by_flow(const Instance& inst, const NtGuess& g, Notion notion) {
    const int gamma = inst.gamma();
    const std::size_t d = g.comps.size();
    // Slots: (j, c) for non-trivial coalitions, then one pool per color.
    std::vector<std::pair<int, ColorId>> slots;
    std::vector<int> capacity;
    std::map<std::pair<int, ColorId>, int> slot_index;
    for (std::size_t j = 0; j < d; ++j) {
        for (ColorId c = 0; c < gamma; ++c) {
            if (const int k = g.comps[j].count(c); k > 0) {
                slot_index[{static_cast<int>(j), c}] = static_cast<int>(slots.size());
                slots.emplace_back(static_cast<int>(j), c);
                capacity.push_back(k);
            }
        }
    }
    for (ColorId c = 0; c < gamma; ++c) {
        if (g.trivial[static_cast<std::size_t>(c)] > 0) {
            slot_index[{NtGuess::kTrivial, c}] = static_cast<int>(slots.size());
            slots.emplace_back(NtGuess::kTrivial, c);
            capacity.push_back(g.trivial[static_cast<std::size_t>(c)]);
        }
    }

    std::vector<int> fixed(static_cast<std::size_t>(inst.n()), -1);  // pre-assigned slot
    if (notion == Notion::IS) {
        std::map<std::pair<ColorId, TypeId>, std::vector<AgentId>> free_agents;
        for (const auto& [c, t] : g.classes) {
            auto agents = inst.agents_of(c, t);
            std::reverse(agents.begin(), agents.end());
            free_agents[{c, t}] = std::move(agents);
        }
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<int> used;
            for (int cls : g.blocker[j]) {
                if (cls == NtGuess::kAccepted || std::find(used.begin(), used.end(), cls) != used.end()) continue;
                used.push_back(cls);
                const auto [c, t] = g.classes[static_cast<std::size_t>(cls)];
                auto& pool = free_agents[{c, t}];
                if (pool.empty() || !class_valid_for(inst, c, t, static_cast<int>(j), g, notion)) return std::nullopt;
                const auto it = slot_index.find({static_cast<int>(j), c});
                if (it == slot_index.end() || capacity[static_cast<std::size_t>(it->second)] == 0) return std::nullopt;
                fixed[static_cast<std::size_t>(pool.back())] = it->second;
                --capacity[static_cast<std::size_t>(it->second)];
                pool.pop_back();
            }
        }
    }

    FlowNetwork net;
    net.right_capacity = capacity;
    std::vector<AgentId> left;
    std::map<std::pair<ColorId, TypeId>, std::vector<int>> edge_cache;
    for (AgentId a = 0; a < inst.n(); ++a) {
        if (fixed[static_cast<std::size_t>(a)] >= 0) continue;
        const ColorId c = inst.color_of(a);
        const TypeId t = inst.type_of(a);
        auto [it, fresh] = edge_cache.try_emplace({c, t});
        if (fresh) {
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (slots[s].second == c && class_valid_for(inst, c, t, slots[s].first, g, notion)) {
                    it->second.push_back(static_cast<int>(s));
                }
            }
        }
        left.push_back(a);
        net.edges.push_back(it->second);
    }
    net.num_left = static_cast<int>(left.size());
    const FlowResult flow = max_flow(net);
    if (flow.value != net.num_left) return std::nullopt;

    std::vector<std::vector<AgentId>> coalitions(d);
    auto place = [&](AgentId a, int s) {
        const int j = slots[static_cast<std::size_t>(s)].first;
        if (j == NtGuess::kTrivial) {
            coalitions.push_back({a});
        } else {
            coalitions[static_cast<std::size_t>(j)].push_back(a);
        }
    };
    for (AgentId a = 0; a < inst.n(); ++a) {
        if (fixed[static_cast<std::size_t>(a)] >= 0) place(a, fixed[static_cast<std::size_t>(a)]);
    }
    for (std::size_t i = 0; i < left.size(); ++i) place(left[i], flow.assignment[i]);
    return Outcome(std::move(coalitions), inst.n()).canonical();
}

namespace {

struct Search {
    const Instance& inst;
    Notion notion;
    SearchCounter counter;
    std::vector<std::pair<ColorId, TypeId>> classes;
    std::optional<Outcome> found;

    // IS: try the blocked-pair subsets and blocker assignments for a fixed
    // set of compositions.
    bool expand_is(NtGuess& g) {
        const int gamma = inst.gamma();
        std::vector<std::pair<ColorId, ColorId>> blockable;
        for (ColorId c = 0; c < gamma; ++c) {
            if (g.trivial[static_cast<std::size_t>(c)] == 0) continue;
            for (ColorId e = 0; e < gamma; ++e) {
                if (e == c || inst.class_sizes()[static_cast<std::size_t>(e)] == 0) continue;
                // Blocking needs some lone agent of color c that rejects e.
                bool possible = false;
                for (const auto& [cc, t] : classes) {
                    possible |= cc == c && inst.pref(t).rank(pair_palette(gamma, c, e)) <
                                               inst.pref(t).rank(Palette::unit(gamma, c));
                }
                if (possible) blockable.emplace_back(c, e);
            }
        }
        // (coalition, color) pairs where a newcomer could be rejected, with
        // the agent kinds able to do it.
        std::vector<std::pair<std::size_t, ColorId>> targets;
        std::vector<std::vector<int>> options;
        for (std::size_t j = 0; j < g.comps.size(); ++j) {
            const Palette here = g.comps[j].palette();
            for (ColorId c = 0; c < gamma; ++c) {
                if (inst.class_sizes()[static_cast<std::size_t>(c)] == 0) continue;
                const Palette joined = g.comps[j].plus(c).palette();
                std::vector<int> opt;
                for (std::size_t k = 0; k < classes.size(); ++k) {
                    const auto [cc, t] = classes[k];
                    if (g.comps[j].count(cc) > 0 && inst.pref(t).rank(joined) < inst.pref(t).rank(here)) {
                        opt.push_back(static_cast<int>(k));
                    }
                }
                if (!opt.empty()) {
                    targets.emplace_back(j, c);
                    options.push_back(std::move(opt));
                }
            }
        }
        const std::size_t subsets = std::size_t{1} << blockable.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            for (auto& row : g.blocked) std::fill(row.begin(), row.end(), false);
            for (std::size_t i = 0; i < blockable.size(); ++i) {
                if (mask >> i & 1) g.blocked[static_cast<std::size_t>(blockable[i].first)][static_cast<std::size_t>(blockable[i].second)] = true;
            }
            if (choose_blockers(g, targets, options, 0)) return true;
        }
        return false;
    }

    bool choose_blockers(NtGuess& g, const std::vector<std::pair<std::size_t, ColorId>>& targets,
                         const std::vector<std::vector<int>>& options, std::size_t i) {
        if (i == targets.size()) {
            counter.tick();
            if (auto o = assign_by_flow(inst, g, notion)) {
                found = std::move(o);
                return true;
            }
            return false;
        }
        const auto [j, c] = targets[i];
        g.blocker[j][static_cast<std::size_t>(c)] = NtGuess::kAccepted;
        if (choose_blockers(g, targets, options, i + 1)) return true;
        for (int cls : options[i]) {
            g.blocker[j][static_cast<std::size_t>(c)] = cls;
            if (choose_blockers(g, targets, options, i + 1)) return true;
        }
        g.blocker[j][static_cast<std::size_t>(c)] = NtGuess::kAccepted;
        return false;
    }

    bool try_comps(const std::vector<Composition>& comps) {
        counter.tick();
        NtGuess g = NtGuess::open(inst, comps);
        int singles = 0;
        for (int v : g.trivial) singles += v;
        if (static_cast<int>(comps.size()) + singles > inst.budgets().rho1) return false;
        if (notion == Notion::NS) {
            if (auto o = assign_by_flow(inst, g, notion)) {
                found = std::move(o);
                return true;
            }
            return false;
        }
        g.classes = classes;
        return expand_is(g);
    }
};

// Compositions of size 2..sigma within the remaining color budget.
void compositions_within(const std::vector<int>& left, int sigma, std::vector<Composition>& out) {
    const int gamma = static_cast<int>(left.size());
    std::vector<int> counts(left.size(), 0);
    auto rec = [&](auto&& self, int c, int size) -> void {
        if (c == gamma) {
            if (size >= 2) out.emplace_back(counts);
            return;
        }
        for (int k = 0; k <= left[static_cast<std::size_t>(c)] && size + k <= sigma; ++k) {
            counts[static_cast<std::size_t>(c)] = k;
            self(self, c + 1, size + k);
        }
        counts[static_cast<std::size_t>(c)] = 0;
    };
    rec(rec, 0, 0);
}

}  // namespace

std::optional<Outcome> solve_colors_ntcoal(const Instance& inst, Notion notion, const SearchLimits& limits) {
    Search s{inst, notion, SearchCounter(limits.max_states, "composition guessing"), {}, std::nullopt};
    for (ColorId c = 0; c < inst.gamma(); ++c) {
        for (TypeId t = 0; t < inst.num_types(); ++t) {
            if (inst.pair_count(c, t) > 0) s.classes.emplace_back(c, t);
        }
    }
    const Budgets& b = inst.budgets();
    std::vector<Composition> chosen;
    // Coalitions are guessed in non-increasing composition order.
    auto rec = [&](auto&& self, std::vector<int>& left) -> bool {
        if (s.try_comps(chosen)) return true;
        if (static_cast<int>(chosen.size()) == b.rho2) return false;
        std::vector<Composition> next;
        compositions_within(left, b.sigma, next);
        for (const auto& comp : next) {
            if (!chosen.empty() && chosen.back() < comp) continue;
            for (ColorId c = 0; c < inst.gamma(); ++c) left[static_cast<std::size_t>(c)] -= comp.count(c);
            chosen.push_back(comp);
            const bool hit = self(self, left);
            chosen.pop_back();
            for (ColorId c = 0; c < inst.gamma(); ++c) left[static_cast<std::size_t>(c)] += comp.count(c);
            if (hit) return true;
        }
        return false;
    };
    std::vector<int> left = inst.class_sizes();
    rec(rec, left);
    return s.found;
}

std::optional<Outcome> solve_colors_totcoal(const Instance& inst, Notion notion, const SearchLimits& limits) {
    Budgets b = inst.budgets();
    b.rho2 = std::min(b.rho2, b.rho1);
    return solve_colors_ntcoal(inst.with_budgets(b), notion, limits);
}

}  // namespace hdg
