#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hdg/limits.hpp"
#include "hdg/stability.hpp"

namespace hdg {

/// Guessed shape of an outcome: the non-trivial coalitions' color
/// compositions, how many agents of each color stay alone and, for IS,
/// which deviations are blocked.
struct NtGuess {
    static constexpr int kTrivial = -1;
    static constexpr int kAccepted = -1;

    std::vector<Composition> comps;  // size >= 2 each
    std::vector<int> trivial;        // agents of each color left alone

    // IS only. blocked[c][c']: no lone agent of color c accepts color c'.
    std::vector<std::vector<bool>> blocked;
    // blocker[j][c]: index into `classes` of the agent kind in coalition j
    // that rejects newcomers of color c, or kAccepted.
    std::vector<std::vector<int>> blocker;
    std::vector<std::pair<ColorId, TypeId>> classes;

    /// Guess with nothing blocked.
    static NtGuess open(const Instance& inst, std::vector<Composition> comps);
};

/// Whether an agent of the given color and type may sit in `slot`
/// (a coalition index or kTrivial) without a deviation allowed by the guess.
bool class_valid_for(const Instance& inst, ColorId c, TypeId t, int slot, const NtGuess& guess, Notion notion);
bool is_valid_for(const Instance& inst, AgentId agent, int slot, const NtGuess& guess, Notion notion);

/// Places every agent by max flow, honoring pre-assigned blockers for IS.
std::optional<Outcome> assign_by_flow(const Instance& inst, const NtGuess& guess, Notion notion);

std::optional<Outcome> solve_colors_ntcoal(const Instance& inst, Notion notion, const SearchLimits& limits = {});
/// Same search with rho2 tightened to min(rho2, rho1).
std::optional<Outcome> solve_colors_totcoal(const Instance& inst, Notion notion, const SearchLimits& limits = {});

}  // namespace hdg
