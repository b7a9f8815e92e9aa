#pragma once

// Nash stability when every agent only cares about the share of its own
// color: branch on the sizes of the non-trivial coalitions, then walk the
// colors one at a time, placing each color class by max flow.

#include <optional>
#include <vector>

#include "hdg/limits.hpp"
#include "hdg/stability.hpp"

namespace hdg {

/// Which colors end up with agents left alone. Agents can only be tempted
/// by a lone agent of another color, so this is all the search needs.
struct SingletonProfile {
    enum class Kind { None, OneColor, Several };
    Kind kind = Kind::None;
    ColorId color = 0;  // for OneColor

    bool sees_foreign_singleton(ColorId c) const {
        return kind == Kind::Several || (kind == Kind::OneColor && c != color);
    }
};

/// One DP state: colors processed so far, agents placed per coalition, and
/// the number of colors (capped at 2) that already have lone agents.
struct Record {
    int colors_done = 0;
    std::vector<int> alloc;
    int lone_colors = 0;

    friend auto operator<=>(const Record&, const Record&) = default;
};

/// Agents of color `c` placed by one arc: slot per agent, 0 for alone and
/// j+1 for coalition j.
struct Placement {
    std::vector<AgentId> agents;
    std::vector<int> slot;
};

/// Tries to place color `from.colors_done` so that the allocation moves
/// from `from.alloc` to `to_alloc` without any agent of that color wanting
/// to move. Returns nullopt when no such placement exists.
std::optional<Placement> arc_exists(const Instance& inst, const Record& from, const std::vector<int>& to_alloc,
                                    const std::vector<int>& sizes, const SingletonProfile& profile);

std::optional<Outcome> solve_ownhdg_nash(const Instance& inst, const SearchLimits& limits = {});

}  // namespace hdg
