#include "hdg/colors_size.hpp"

#include <algorithm>
#include <numeric>

#include "hdg/ilp.hpp"

namespace hdg {

CoalitionTypes enumerate_coalition_types(const Instance& inst, const SearchLimits& limits) {
    CoalitionTypes ct;
    for (ColorId c = 0; c < inst.gamma(); ++c) {
        for (TypeId t = 0; t < inst.num_types(); ++t) {
            if (const int k = inst.pair_count(c, t); k > 0) {
                ct.pairs.emplace_back(c, t);
                ct.available.push_back(k);
            }
        }
    }
    const int sigma = inst.budgets().sigma;
    SearchCounter counter(limits.max_states, "coalition type enumeration");
    std::vector<int> counts(ct.pairs.size(), 0);
    auto rec = [&](auto&& self, std::size_t p, int size) -> void {
        if (p == ct.pairs.size()) {
            if (size == 0) return;
            counter.tick();
            Composition comp(inst.gamma());
            for (std::size_t i = 0; i < counts.size(); ++i) comp.add(ct.pairs[i].first, counts[i]);
            ct.types.push_back({counts, size, comp, comp.palette()});
            return;
        }
        for (int k = 0; k <= ct.available[p] && size + k <= sigma; ++k) {
            counts[p] = k;
            self(self, p + 1, size + k);
        }
        counts[p] = 0;
    };
    rec(rec, 0, 0);
    std::sort(ct.types.begin(), ct.types.end(), [](const CoalitionType& a, const CoalitionType& b) {
        return std::tie(a.size, a.counts) < std::tie(b.size, b.counts);
    });
    return ct;
}

namespace {

// Whether an agent of pair p sitting in `from` deviates into `to` (nullptr
// for being alone).
bool pair_deviates(const Instance& inst, const CoalitionTypes& ct, std::size_t p, const CoalitionType& from,
                   const CoalitionType* to, Notion notion) {
    const auto [c, t] = ct.pairs[p];
    const PreferenceOrder& pref = inst.pref(t);
    const int current = pref.rank(from.palette);
    if (!to) return pref.rank(Palette::unit(inst.gamma(), c)) > current;
    const Palette joined = to->composition.plus(c).palette();
    if (pref.rank(joined) <= current) return false;
    if (notion == Notion::NS) return true;
    for (std::size_t q = 0; q < ct.pairs.size(); ++q) {
        if (to->counts[q] == 0) continue;
        const PreferenceOrder& other = inst.pref(ct.pairs[q].second);
        if (other.rank(joined) < other.rank(to->palette)) return false;
    }
    return true;
}

// Deviations out of type i into type j (or alone when j < 0).
bool type_deviates(const Instance& inst, const CoalitionTypes& ct, int i, int j, Notion notion) {
    const CoalitionType& from = ct.types[static_cast<std::size_t>(i)];
    const CoalitionType* to = j < 0 ? nullptr : &ct.types[static_cast<std::size_t>(j)];
    for (std::size_t p = 0; p < ct.pairs.size(); ++p) {
        if (from.counts[p] > 0 && pair_deviates(inst, ct, p, from, to, notion)) return true;
    }
    return false;
}

// Deviations that involve type `i` given the already realized set.
bool unstable_with(const Instance& inst, const CoalitionTypes& ct, const std::vector<Occurrence>& branch,
                   const std::vector<int>& realized, int i, Notion notion) {
    if (type_deviates(inst, ct, i, -1, notion)) return true;
    if (branch[static_cast<std::size_t>(i)] == Occurrence::Many && type_deviates(inst, ct, i, i, notion)) return true;
    for (int j : realized) {
        if (j == i) continue;
        if (type_deviates(inst, ct, i, j, notion) || type_deviates(inst, ct, j, i, notion)) return true;
    }
    return false;
}

struct Candidate {
    std::vector<Occurrence> branch;
    int realized_agents = 0;
};

}  // namespace

bool branch_is_stable(const Instance& inst, const CoalitionTypes& ct, const std::vector<Occurrence>& branch,
                      Notion notion) {
    std::vector<int> realized;
    for (std::size_t i = 0; i < branch.size(); ++i) {
        if (branch[i] != Occurrence::None) realized.push_back(static_cast<int>(i));
    }
    for (int i : realized) {
        if (unstable_with(inst, ct, branch, realized, i, notion)) return false;
    }
    return true;
}

std::optional<Outcome> solve_colors_size(const Instance& inst, Notion notion, const SearchLimits& limits) {
    const CoalitionTypes ct = enumerate_coalition_types(inst, limits);
    const Budgets& b = inst.budgets();
    const std::size_t P = ct.pairs.size();
    const int T = static_cast<int>(ct.types.size());

    SearchCounter counter(limits.max_states, "coalition type branching");
    std::vector<Occurrence> branch(static_cast<std::size_t>(T), Occurrence::None);
    std::vector<int> used(P, 0);  // agents consumed per pair, 2+ counted as 2
    std::vector<int> realized;
    int coalitions = 0;
    int nontrivial = 0;
    std::vector<Candidate> stable;

    auto rec = [&](auto&& self, int i) -> void {
        counter.tick();
        if (i == T) {
            // Pairs with agents left over must be absorbed by some 2+ type.
            for (std::size_t p = 0; p < P; ++p) {
                if (used[p] == ct.available[p]) continue;
                bool absorbed = false;
                for (int j : realized) {
                    absorbed |= branch[static_cast<std::size_t>(j)] == Occurrence::Many &&
                                ct.types[static_cast<std::size_t>(j)].counts[p] > 0;
                }
                if (!absorbed) return;
            }
            stable.push_back({branch, std::accumulate(used.begin(), used.end(), 0)});
            return;
        }
        self(self, i + 1);
        const CoalitionType& type = ct.types[static_cast<std::size_t>(i)];
        for (int mult : {1, 2}) {
            bool fits = coalitions + mult <= b.rho1 && (type.size < 2 || nontrivial + mult <= b.rho2);
            for (std::size_t p = 0; p < P && fits; ++p) fits = used[p] + mult * type.counts[p] <= ct.available[p];
            if (!fits) break;
            branch[static_cast<std::size_t>(i)] = static_cast<Occurrence>(mult);
            realized.push_back(i);
            if (!unstable_with(inst, ct, branch, realized, i, notion)) {
                for (std::size_t p = 0; p < P; ++p) used[p] += mult * type.counts[p];
                coalitions += mult;
                nontrivial += type.size >= 2 ? mult : 0;
                self(self, i + 1);
                for (std::size_t p = 0; p < P; ++p) used[p] -= mult * type.counts[p];
                coalitions -= mult;
                nontrivial -= type.size >= 2 ? mult : 0;
            }
            realized.pop_back();
            branch[static_cast<std::size_t>(i)] = Occurrence::None;
        }
    };
    rec(rec, 0);

    std::stable_sort(stable.begin(), stable.end(),
                     [](const Candidate& a, const Candidate& b) { return a.realized_agents < b.realized_agents; });

    for (const Candidate& cand : stable) {
        std::vector<int> many;
        for (int i = 0; i < T; ++i) {
            if (cand.branch[static_cast<std::size_t>(i)] == Occurrence::Many) many.push_back(i);
        }
        IlpSystem sys;
        sys.num_vars = static_cast<int>(many.size());
        int fixed_coalitions = 0;
        int fixed_nontrivial = 0;
        for (int i = 0; i < T; ++i) {
            const int mult = static_cast<int>(cand.branch[static_cast<std::size_t>(i)]);
            fixed_coalitions += mult;
            if (ct.types[static_cast<std::size_t>(i)].size >= 2) fixed_nontrivial += mult;
        }
        for (std::size_t p = 0; p < P; ++p) {
            IlpRow row;
            int rhs = ct.available[p];
            for (int i = 0; i < T; ++i) {
                rhs -= static_cast<int>(cand.branch[static_cast<std::size_t>(i)]) * ct.types[static_cast<std::size_t>(i)].counts[p];
            }
            for (int i : many) row.coeffs.push_back(ct.types[static_cast<std::size_t>(i)].counts[p]);
            row.rhs = rhs;
            sys.equalities.push_back(std::move(row));
        }
        IlpRow all{std::vector<int>(many.size(), 1), b.rho1 - fixed_coalitions};
        IlpRow nt;
        for (int i : many) nt.coeffs.push_back(ct.types[static_cast<std::size_t>(i)].size >= 2 ? 1 : 0);
        nt.rhs = b.rho2 - fixed_nontrivial;
        sys.inequalities_le = {all, nt};
        const auto x = ilp_feasible(sys, limits);
        if (!x) continue;

        std::vector<std::vector<AgentId>> pools(P);
        for (std::size_t p = 0; p < P; ++p) {
            pools[p] = inst.agents_of(ct.pairs[p].first, ct.pairs[p].second);
            std::reverse(pools[p].begin(), pools[p].end());
        }
        std::vector<std::vector<AgentId>> coalitions_out;
        for (int i = 0; i < T; ++i) {
            int copies = static_cast<int>(cand.branch[static_cast<std::size_t>(i)]);
            if (copies == 0) continue;
            if (cand.branch[static_cast<std::size_t>(i)] == Occurrence::Many) {
                copies += (*x)[static_cast<std::size_t>(std::find(many.begin(), many.end(), i) - many.begin())];
            }
            for (int k = 0; k < copies; ++k) {
                std::vector<AgentId> members;
                for (std::size_t p = 0; p < P; ++p) {
                    for (int r = 0; r < ct.types[static_cast<std::size_t>(i)].counts[p]; ++r) {
                        members.push_back(pools[p].back());
                        pools[p].pop_back();
                    }
                }
                coalitions_out.push_back(std::move(members));
            }
        }
        return Outcome(std::move(coalitions_out), inst.n()).canonical();
    }
    return std::nullopt;
}

}  // namespace hdg
