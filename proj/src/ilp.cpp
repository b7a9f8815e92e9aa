#include "hdg/ilp.hpp"

#include <map>

namespace hdg {

void IlpSystem::validate() const {
    if (num_vars < 0) throw InvalidInput("negative variable count");
    auto check = [&](const IlpRow& r) {
        if (static_cast<int>(r.coeffs.size()) != num_vars) throw InvalidInput("ILP row arity does not match variables");
        if (r.rhs < 0) throw InvalidInput("ILP right-hand side must be non-negative");
        for (int c : r.coeffs) {
            if (c < 0) throw InvalidInput("ILP coefficients must be non-negative");
        }
    };
    for (const auto& r : equalities) check(r);
    for (const auto& r : inequalities_le) check(r);
}

bool IlpSystem::satisfied_by(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != num_vars) return false;
    auto lhs = [&](const IlpRow& r) {
        long long s = 0;
        for (int v = 0; v < num_vars; ++v) s += static_cast<long long>(r.coeffs[static_cast<std::size_t>(v)]) * x[static_cast<std::size_t>(v)];
        return s;
    };
    for (int v : x) {
        if (v < 0) return false;
    }
    for (const auto& r : equalities) {
        if (lhs(r) != r.rhs) return false;
    }
    for (const auto& r : inequalities_le) {
        if (lhs(r) > r.rhs) return false;
    }
    return true;
}

std::optional<std::vector<int>> ilp_feasible(const IlpSystem& sys, const SearchLimits& limits) {
    sys.validate();
    // Residual vector: equalities first, then inequality slack budgets.
    std::vector<const IlpRow*> rows;
    for (const auto& r : sys.equalities) rows.push_back(&r);
    for (const auto& r : sys.inequalities_le) rows.push_back(&r);
    const std::size_t m = rows.size();
    const std::size_t neq = sys.equalities.size();

    using State = std::vector<int>;
    std::vector<int> start(m);
    for (std::size_t i = 0; i < m; ++i) start[i] = rows[i]->rhs;

    // layers[v] maps a residual reached after fixing variables < v to the
    // (predecessor residual, value of variable v-1) that produced it.
    std::vector<std::map<State, std::pair<State, int>>> layers(static_cast<std::size_t>(sys.num_vars) + 1);
    layers[0].emplace(start, std::pair<State, int>{{}, 0});
    SearchCounter counter(limits.max_states, "ILP dynamic program");

    for (int v = 0; v < sys.num_vars; ++v) {
        const auto& cur = layers[static_cast<std::size_t>(v)];
        auto& next = layers[static_cast<std::size_t>(v) + 1];
        bool zero_column = true;
        for (std::size_t i = 0; i < m; ++i) zero_column &= rows[i]->coeffs[static_cast<std::size_t>(v)] == 0;
        for (const auto& [res, _] : cur) {
            State r = res;
            for (int x = 0;; ++x) {
                counter.tick();
                next.try_emplace(r, std::pair<State, int>{res, x});
                if (zero_column) break;
                bool ok = true;
                for (std::size_t i = 0; i < m; ++i) {
                    r[i] -= rows[i]->coeffs[static_cast<std::size_t>(v)];
                    ok &= r[i] >= 0;
                }
                if (!ok) break;
            }
        }
    }

    const auto& last = layers.back();
    for (const auto& [res, _] : last) {
        bool done = true;
        for (std::size_t i = 0; i < neq; ++i) done &= res[i] == 0;
        if (!done) continue;
        std::vector<int> x(static_cast<std::size_t>(sys.num_vars));
        State s = res;
        for (int v = sys.num_vars; v > 0; --v) {
            const auto& back = layers[static_cast<std::size_t>(v)].at(s);
            x[static_cast<std::size_t>(v) - 1] = back.second;
            s = back.first;
        }
        return x;
    }
    return std::nullopt;
}

}  // namespace hdg
