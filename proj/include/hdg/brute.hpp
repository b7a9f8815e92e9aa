#pragma once

// Exhaustive reference solvers. These are the oracles every other solver
// is checked against, so they stay free of heuristics.

#include <functional>
#include <optional>

#include "hdg/limits.hpp"
#include "hdg/stability.hpp"

namespace hdg {

/// All set partitions (restricted growth strings) that respect sigma, rho1
/// and rho2. Agents of one color and type take non-decreasing block
/// indices, which removes most but not all partitions that only differ by
/// swapping such agents. The visitor returns false to stop early.
void for_each_budget_partition(const Instance& inst, const std::function<bool(const Outcome&)>& visit,
                               const SearchLimits& limits = {});

/// Visits every stable budget-respecting outcome, up to swapping agents of
/// the same color and type.
void for_each_stable(const Instance& inst, Notion notion, const std::function<bool(const Outcome&)>& visit,
                     const SearchLimits& limits = {});

std::optional<Outcome> solve_brute(const Instance& inst, Notion notion, const SearchLimits& limits = {});

/// Branches on the number and sizes of non-trivial coalitions, then on the
/// agents filling those positions; everyone else stays alone.
std::optional<Outcome> solve_brute_positions(const Instance& inst, Notion notion, const SearchLimits& limits = {});

}  // namespace hdg
