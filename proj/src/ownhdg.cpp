#include "hdg/ownhdg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "hdg/maxflow.hpp"

namespace hdg {

namespace {

int share_rank(const Instance& inst, TypeId t, ColorId c, int r, int s) {
    return inst.pref(t).rank(own_share_palette(inst.gamma(), c, r, s));
}

}  // namespace

std::optional<Placement> arc_exists(const Instance& inst, const Record& from, const std::vector<int>& to_alloc,
                                    const std::vector<int>& sizes, const SingletonProfile& profile) {
    const ColorId c = from.colors_done;
    const std::size_t k = sizes.size();
    std::vector<int> fresh(k);
    int placed = 0;
    for (std::size_t j = 0; j < k; ++j) {
        fresh[j] = to_alloc[j] - from.alloc[j];
        if (fresh[j] < 0 || to_alloc[j] > sizes[j]) return std::nullopt;
        placed += fresh[j];
    }
    const int class_size = inst.class_sizes()[static_cast<std::size_t>(c)];
    const int alone = class_size - placed;
    if (alone < 0) return std::nullopt;
    const bool foreign = profile.sees_foreign_singleton(c);

    std::vector<AgentId> agents;
    for (AgentId a = 0; a < inst.n(); ++a) {
        if (inst.color_of(a) == c) agents.push_back(a);
    }
    FlowNetwork net;
    net.num_left = static_cast<int>(agents.size());
    net.right_capacity.push_back(alone);
    for (int f : fresh) net.right_capacity.push_back(f);
    std::map<TypeId, std::vector<int>> by_type;
    for (AgentId a : agents) {
        const TypeId t = inst.type_of(a);
        auto [it, inserted] = by_type.try_emplace(t);
        if (inserted) {
            auto tempted_by = [&](int own) {
                if (foreign && share_rank(inst, t, c, 1, 2) > own) return true;
                for (std::size_t l = 0; l < k; ++l) {
                    if (share_rank(inst, t, c, fresh[l] + 1, sizes[l] + 1) > own) return true;
                }
                return false;
            };
            const int solo = share_rank(inst, t, c, 1, 1);
            if (!tempted_by(solo)) it->second.push_back(0);
            for (std::size_t j = 0; j < k; ++j) {
                if (fresh[j] == 0) continue;
                const int own = share_rank(inst, t, c, fresh[j], sizes[j]);
                if (own < solo) continue;
                bool ok = !(foreign && share_rank(inst, t, c, 1, 2) > own);
                for (std::size_t l = 0; l < k && ok; ++l) {
                    if (l != j) ok = share_rank(inst, t, c, fresh[l] + 1, sizes[l] + 1) <= own;
                }
                if (ok) it->second.push_back(static_cast<int>(j) + 1);
            }
        }
        net.edges.push_back(it->second);
    }
    const FlowResult flow = max_flow(net);
    if (flow.value != net.num_left) return std::nullopt;
    return Placement{agents, flow.assignment};
}

namespace {

struct Branch {
    const Instance& inst;
    std::vector<int> sizes;
    SingletonProfile profile;
    SearchCounter& counter;

    bool lone_allowed(ColorId c, int alone) const {
        switch (profile.kind) {
            case SingletonProfile::Kind::None: return alone == 0;
            case SingletonProfile::Kind::OneColor: return c == profile.color ? alone > 0 : alone == 0;
            case SingletonProfile::Kind::Several: return true;
        }
        return false;
    }

    std::optional<Outcome> search() {
        const int gamma = inst.gamma();
        const std::size_t k = sizes.size();
        // Agents of colors after c that are still to be placed.
        std::vector<int> later(static_cast<std::size_t>(gamma) + 1, 0);
        for (int c = gamma - 1; c >= 0; --c) later[static_cast<std::size_t>(c)] = later[static_cast<std::size_t>(c) + 1] + inst.class_sizes()[static_cast<std::size_t>(c)];

        struct Parent {
            Record prev;
            Placement placement;
        };
        std::map<Record, std::optional<Parent>> seen;
        Record start{0, std::vector<int>(k, 0), 0};
        seen.emplace(start, std::nullopt);
        std::queue<Record> q;
        q.push(start);
        std::optional<Record> goal;
        while (!q.empty() && !goal) {
            const Record rec = q.front();
            q.pop();
            if (rec.colors_done == gamma) {
                const bool lone_ok = profile.kind != SingletonProfile::Kind::Several || rec.lone_colors >= 2;
                if (rec.alloc == sizes && lone_ok) goal = rec;
                continue;
            }
            const ColorId c = rec.colors_done;
            const int cls = inst.class_sizes()[static_cast<std::size_t>(c)];
            std::vector<int> to = rec.alloc;
            auto enumerate = [&](auto&& self, std::size_t j, int used) -> void {
                if (goal) return;
                if (j == k) {
                    counter.tick();
                    const int alone = cls - used;
                    if (!lone_allowed(c, alone)) return;
                    // Whatever is still missing must come from later colors.
                    int missing = 0;
                    for (std::size_t l = 0; l < k; ++l) missing += sizes[l] - to[l];
                    if (missing > later[static_cast<std::size_t>(c) + 1]) return;
                    Record nxt{c + 1, to, std::min(2, rec.lone_colors + (alone > 0 ? 1 : 0))};
                    if (seen.count(nxt)) return;
                    auto placement = arc_exists(inst, rec, to, sizes, profile);
                    if (!placement) return;
                    seen.emplace(nxt, Parent{rec, std::move(*placement)});
                    q.push(nxt);
                    return;
                }
                for (int f = 0; used + f <= cls && rec.alloc[j] + f <= sizes[j]; ++f) {
                    to[j] = rec.alloc[j] + f;
                    self(self, j + 1, used + f);
                }
                to[j] = rec.alloc[j];
            };
            enumerate(enumerate, 0, 0);
        }
        if (!goal) return std::nullopt;

        std::vector<std::vector<AgentId>> coalitions(k);
        Record cur = *goal;
        while (true) {
            const auto& parent = seen.at(cur);
            if (!parent) break;
            const Placement& pl = parent->placement;
            for (std::size_t i = 0; i < pl.agents.size(); ++i) {
                if (pl.slot[i] == 0) {
                    coalitions.push_back({pl.agents[i]});
                } else {
                    coalitions[static_cast<std::size_t>(pl.slot[i] - 1)].push_back(pl.agents[i]);
                }
            }
            cur = parent->prev;
        }
        return Outcome(std::move(coalitions), inst.n()).canonical();
    }
};

}  // namespace

std::optional<Outcome> solve_ownhdg_nash(const Instance& inst, const SearchLimits& limits) {
    require_own_color(inst);
    const Budgets& b = inst.budgets();
    const int n = inst.n();
    const int k_max = std::min(b.rho2, n / 2);
    SearchCounter counter(limits.max_states, "own-color record search");

    std::vector<SingletonProfile> profiles{{SingletonProfile::Kind::None, 0}};
    int nonempty = 0;
    for (ColorId c = 0; c < inst.gamma(); ++c) {
        if (inst.class_sizes()[static_cast<std::size_t>(c)] == 0) continue;
        profiles.push_back({SingletonProfile::Kind::OneColor, c});
        ++nonempty;
    }
    if (nonempty >= 2) profiles.push_back({SingletonProfile::Kind::Several, 0});

    std::vector<int> sizes;
    std::optional<Outcome> found;
    auto rec = [&](auto&& self, int max_size, int remaining) -> bool {
        if (static_cast<int>(sizes.size()) + remaining <= b.rho1) {
            for (const auto& profile : profiles) {
                counter.tick();
                Branch br{inst, sizes, profile, counter};
                if ((found = br.search())) return true;
            }
        }
        if (static_cast<int>(sizes.size()) == k_max) return false;
        for (int s = std::min(max_size, remaining); s >= 2; --s) {
            sizes.push_back(s);
            if (self(self, s, remaining - s)) return true;
            sizes.pop_back();
        }
        return false;
    };
    rec(rec, std::min(b.sigma, n), n);
    return found;
}

}  // namespace hdg
