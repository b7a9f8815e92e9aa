#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hdg/limits.hpp"
#include "hdg/stability.hpp"

namespace hdg {

/// A coalition up to agent identity: how many agents of each present
/// (color, type) pair it holds.
struct CoalitionType {
    std::vector<int> counts;  // indexed like CoalitionTypes::pairs
    int size = 0;
    Composition composition;
    Palette palette;
};

struct CoalitionTypes {
    std::vector<std::pair<ColorId, TypeId>> pairs;  // present pairs, sorted
    std::vector<int> available;                    // n_{c,t} per pair
    std::vector<CoalitionType> types;
};

/// Multiplicity of a coalition type in a branch: 0, exactly 1, or 2 or more.
enum class Occurrence : int { None = 0, One = 1, Many = 2 };

/// All multisets over the present pairs with sizes 1..sigma and per-pair
/// multiplicity at most n_{c,t}.
CoalitionTypes enumerate_coalition_types(const Instance& inst, const SearchLimits& limits = {});

/// Whether no realized coalition type admits a deviation into another
/// realized type, into a second copy of itself, or to being alone.
bool branch_is_stable(const Instance& inst, const CoalitionTypes& ct, const std::vector<Occurrence>& branch,
                      Notion notion);

std::optional<Outcome> solve_colors_size(const Instance& inst, Notion notion, const SearchLimits& limits = {});

}  // namespace hdg
