#pragma once

#include <optional>
#include <vector>

#include "hdg/limits.hpp"

namespace hdg {

struct IlpRow {
    std::vector<int> coeffs;  // one per variable, non-negative
    int rhs = 0;
};

/// Feasibility system over non-negative integer variables.
struct IlpSystem {
    int num_vars = 0;
    std::vector<IlpRow> equalities;
    std::vector<IlpRow> inequalities_le;

    /// Throws InvalidInput on negative coefficients/rhs or arity mismatch.
    void validate() const;
    bool satisfied_by(const std::vector<int>& x) const;
};

/// DP over residual right-hand sides. Returns a satisfying assignment, or
/// nullopt when the system is infeasible.
std::optional<std::vector<int>> ilp_feasible(const IlpSystem& system, const SearchLimits& limits = {});

}  // namespace hdg
