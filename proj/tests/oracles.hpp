#pragma once

// Exhaustive reference answers for the subroutines, shared by the unit
// tests and the acceptance runner.

#include <algorithm>
#include <random>

#include "hdg/ilp.hpp"
#include "hdg/maxflow.hpp"

namespace hdg::test {

/// Any solution can be cut down to entries in [0, max rhs]: a variable with
/// a positive coefficient is bounded by that row, others can be zero.
inline bool ilp_feasible_by_box(const IlpSystem& sys) {
    int bound = 0;
    for (const auto& r : sys.equalities) bound = std::max(bound, r.rhs);
    for (const auto& r : sys.inequalities_le) bound = std::max(bound, r.rhs);
    std::vector<int> x(static_cast<std::size_t>(sys.num_vars), 0);
    while (true) {
        if (sys.satisfied_by(x)) return true;
        int i = 0;
        while (i < sys.num_vars && ++x[static_cast<std::size_t>(i)] > bound) x[static_cast<std::size_t>(i++)] = 0;
        if (i == sys.num_vars) return false;
    }
}

inline IlpSystem random_ilp(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> vars(1, 3), rows(0, 3), coeff(0, 3), rhs(0, 7);
    IlpSystem sys;
    sys.num_vars = vars(rng);
    auto row = [&] {
        IlpRow r;
        for (int i = 0; i < sys.num_vars; ++i) r.coeffs.push_back(coeff(rng));
        r.rhs = rhs(rng);
        return r;
    };
    for (int k = rows(rng); k > 0; --k) sys.equalities.push_back(row());
    for (int k = rows(rng); k > 0; --k) sys.inequalities_le.push_back(row());
    return sys;
}

/// Largest number of left nodes that can be matched, by trying every
/// choice (including "unmatched") per left node.
inline int max_assignment_by_enumeration(const FlowNetwork& net) {
    std::vector<int> load(static_cast<std::size_t>(net.num_right()), 0);
    int best = 0;
    auto rec = [&](auto&& self, int l, int matched) -> void {
        if (matched + (net.num_left - l) <= best) return;
        if (l == net.num_left) {
            best = matched;
            return;
        }
        for (int r : net.edges[static_cast<std::size_t>(l)]) {
            auto& ld = load[static_cast<std::size_t>(r)];
            if (ld == net.right_capacity[static_cast<std::size_t>(r)]) continue;
            ++ld;
            self(self, l + 1, matched + 1);
            --ld;
        }
        self(self, l + 1, matched);
    };
    rec(rec, 0, 0);
    return best;
}

inline FlowNetwork random_network(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> left(0, 6), right(1, 4), cap(0, 3);
    std::bernoulli_distribution edge(0.45);
    FlowNetwork net;
    net.num_left = left(rng);
    for (int r = right(rng); r > 0; --r) net.right_capacity.push_back(cap(rng));
    for (int l = 0; l < net.num_left; ++l) {
        std::vector<int> adj;
        for (int r = 0; r < net.num_right(); ++r) {
            if (edge(rng)) adj.push_back(r);
        }
        net.edges.push_back(adj);
    }
    return net;
}

/// Whether an assignment respects edges and capacities and has `value` matches.
inline bool valid_assignment(const FlowNetwork& net, const FlowResult& f) {
    if (static_cast<int>(f.assignment.size()) != net.num_left) return false;
    std::vector<int> load(static_cast<std::size_t>(net.num_right()), 0);
    int matched = 0;
    for (int l = 0; l < net.num_left; ++l) {
        const int r = f.assignment[static_cast<std::size_t>(l)];
        if (r < 0) continue;
        const auto& adj = net.edges[static_cast<std::size_t>(l)];
        if (std::find(adj.begin(), adj.end(), r) == adj.end()) return false;
        ++load[static_cast<std::size_t>(r)];
        ++matched;
    }
    for (int r = 0; r < net.num_right(); ++r) {
        if (load[static_cast<std::size_t>(r)] > net.right_capacity[static_cast<std::size_t>(r)]) return false;
    }
    return matched == f.value;
}

}  // namespace hdg::test
