#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdg/colors_size.hpp"

namespace hdg {

/// Guessed preference levels (ranks under the pair's type) of the worst and
/// second-worst coalitions holding a given (color, type) pair.
struct WorstLevels {
    std::vector<int> worst;   // per present pair
    std::vector<int> second;  // second[p] >= worst[p]
};

/// Summary of a partial packing of coalitions.
struct Pattern {
    std::vector<int> used;              // agents placed per pair
    std::vector<std::uint8_t> flagged;  // some coalition holds the pair below its second-worst level
    int nontrivial = 0;
    int coalitions = 0;

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// Conditions that do not depend on the pattern: budget on size, the
/// worst-level floor for present pairs, and the no-incoming-deviation test.
bool candidate_admissible(const Instance& inst, const CoalitionTypes& ct, const CoalitionType& cand,
                          const WorstLevels& levels, Notion notion);

/// Full compatibility of a candidate coalition with a pattern.
bool coalition_compatible(const Instance& inst, const CoalitionTypes& ct, const CoalitionType& cand,
                          const Pattern& pattern, const WorstLevels& levels, Notion notion);

std::optional<Outcome> solve_colors_types(const Instance& inst, Notion notion, const SearchLimits& limits = {});

}  // namespace hdg
