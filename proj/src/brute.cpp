#include "hdg/brute.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace hdg {

SearchLimits SearchLimits::from_env() {
    SearchLimits l;
    if (const char* cap = std::getenv("HDG_SEARCH_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(cap, &end, 10);
        if (end != cap && *end == '\0' && v > 0) l.max_states = v;
    }
    return l;
}

namespace {

struct RgsState {
    const Instance& inst;
    const std::function<bool(const Outcome&)>& visit;
    std::vector<AgentId> order;     // agents grouped by (color, type)
    std::vector<bool> same_as_prev;  // order[i] shares color and type with order[i-1]
    std::vector<int> block;          // block index per position
    std::vector<int> block_size;
    int nontrivial = 0;
    SearchCounter counter;
    bool stopped = false;

    void emit() {
        std::vector<std::vector<AgentId>> cs(block_size.size());
        for (std::size_t i = 0; i < order.size(); ++i) cs[static_cast<std::size_t>(block[i])].push_back(order[i]);
        if (!visit(Outcome(std::move(cs), inst.n()))) stopped = true;
    }

    void recurse(std::size_t pos) {
        if (stopped) return;
        counter.tick();
        const Budgets& b = inst.budgets();
        if (pos == order.size()) {
            emit();
            return;
        }
        const int blocks = static_cast<int>(block_size.size());
        const int lo = (pos > 0 && same_as_prev[pos]) ? block[pos - 1] : 0;
        for (int k = lo; k <= blocks && !stopped; ++k) {
            if (k == blocks) {
                if (blocks + 1 > b.rho1) break;
                block_size.push_back(1);
                block[pos] = k;
                recurse(pos + 1);
                block_size.pop_back();
            } else {
                const auto kk = static_cast<std::size_t>(k);
                if (block_size[kk] + 1 > b.sigma) continue;
                const bool becomes_nontrivial = block_size[kk] == 1;
                if (becomes_nontrivial && nontrivial + 1 > b.rho2) continue;
                ++block_size[kk];
                nontrivial += becomes_nontrivial;
                block[pos] = k;
                recurse(pos + 1);
                nontrivial -= becomes_nontrivial;
                --block_size[kk];
            }
        }
    }
};

}  // namespace

void for_each_budget_partition(const Instance& inst, const std::function<bool(const Outcome&)>& visit,
                               const SearchLimits& limits) {
    if (inst.n() > limits.brute_max_n) {
        throw InstanceTooLarge("brute force is capped at n=" + std::to_string(limits.brute_max_n) + ", instance has n=" +
                               std::to_string(inst.n()));
    }
    RgsState st{inst, visit, {}, {}, {}, {}, 0, SearchCounter(limits.max_states, "brute force"), false};
    st.order.resize(static_cast<std::size_t>(inst.n()));
    std::iota(st.order.begin(), st.order.end(), 0);
    std::stable_sort(st.order.begin(), st.order.end(), [&](AgentId x, AgentId y) {
        return std::pair(inst.color_of(x), inst.type_of(x)) < std::pair(inst.color_of(y), inst.type_of(y));
    });
    st.same_as_prev.assign(st.order.size(), false);
    for (std::size_t i = 1; i < st.order.size(); ++i) {
        st.same_as_prev[i] = inst.color_of(st.order[i]) == inst.color_of(st.order[i - 1]) &&
                             inst.type_of(st.order[i]) == inst.type_of(st.order[i - 1]);
    }
    st.block.assign(st.order.size(), 0);
    st.recurse(0);
}

void for_each_stable(const Instance& inst, Notion notion, const std::function<bool(const Outcome&)>& visit,
                     const SearchLimits& limits) {
    for_each_budget_partition(
        inst,
        [&](const Outcome& o) {
            if (find_deviation(inst, o, notion)) return true;
            return visit(o);
        },
        limits);
}

std::optional<Outcome> solve_brute(const Instance& inst, Notion notion, const SearchLimits& limits) {
    std::optional<Outcome> found;
    for_each_stable(
        inst, notion,
        [&](const Outcome& o) {
            found = o;
            return false;
        },
        limits);
    return found;
}

namespace {

struct PositionSearch {
    const Instance& inst;
    Notion notion;
    std::vector<int> sizes;
    std::vector<std::vector<AgentId>> groups;
    std::vector<bool> used;
    SearchCounter& counter;
    std::optional<Outcome> found;

    bool finish() {
        counter.tick();
        auto cs = groups;
        for (AgentId a = 0; a < inst.n(); ++a) {
            if (!used[static_cast<std::size_t>(a)]) cs.push_back({a});
        }
        Outcome o(std::move(cs), inst.n());
        if (budget_violation(inst.budgets(), o) || find_deviation(inst, o, notion)) return false;
        found = std::move(o);
        return true;
    }

    // Equal-sized consecutive groups are ordered by their smallest member.
    bool fill_canonical(std::size_t g) {
        if (g == sizes.size()) return finish();
        const AgentId min_first = (g > 0 && sizes[g] == sizes[g - 1]) ? groups[g - 1].front() + 1 : 0;
        for (AgentId first = min_first; first < inst.n(); ++first) {
            if (used[static_cast<std::size_t>(first)]) continue;
            used[static_cast<std::size_t>(first)] = true;
            groups[g].push_back(first);
            const bool ok = fill_rest(g, first + 1);
            groups[g].pop_back();
            used[static_cast<std::size_t>(first)] = false;
            if (ok) return true;
        }
        return false;
    }

    bool fill_rest(std::size_t g, AgentId from) {
        if (static_cast<int>(groups[g].size()) == sizes[g]) return fill_canonical(g + 1);
        for (AgentId a = from; a < inst.n(); ++a) {
            if (used[static_cast<std::size_t>(a)]) continue;
            used[static_cast<std::size_t>(a)] = true;
            groups[g].push_back(a);
            const bool ok = fill_rest(g, a + 1);
            groups[g].pop_back();
            used[static_cast<std::size_t>(a)] = false;
            if (ok) return true;
        }
        return false;
    }
};

bool size_vectors(std::vector<int>& sizes, int d, int max_size, int remaining,
                  const std::function<bool(const std::vector<int>&)>& visit) {
    if (static_cast<int>(sizes.size()) == d) return visit(sizes);
    for (int s = std::min(max_size, remaining); s >= 2; --s) {
        sizes.push_back(s);
        const bool stop = size_vectors(sizes, d, s, remaining - s, visit);
        sizes.pop_back();
        if (stop) return true;
    }
    return false;
}

}  // namespace

std::optional<Outcome> solve_brute_positions(const Instance& inst, Notion notion, const SearchLimits& limits) {
    const Budgets& b = inst.budgets();
    const int n = inst.n();
    const int rho2_eff = std::min(b.rho2, n / 2);
    const int sigma_eff = std::min(b.sigma, n);
    if (rho2_eff * sigma_eff > limits.positions_max) {
        throw InstanceTooLarge("position branching is capped at rho2*sigma=" + std::to_string(limits.positions_max));
    }
    SearchCounter counter(limits.max_states, "position branching");
    for (int d = 0; d <= rho2_eff; ++d) {
        std::vector<int> sizes;
        std::optional<Outcome> found;
        size_vectors(sizes, d, sigma_eff, n, [&](const std::vector<int>& sz) {
            const int covered = std::accumulate(sz.begin(), sz.end(), 0);
            if (d + (n - covered) > b.rho1) return false;
            PositionSearch ps{inst, notion, sz, std::vector<std::vector<AgentId>>(sz.size()),
                              std::vector<bool>(static_cast<std::size_t>(n), false), counter, std::nullopt};
            if (ps.fill_canonical(0)) {
                found = std::move(ps.found);
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace hdg
