#pragma once

// Instance generators for the hardness reductions, the exhaustive deciders
// for their source problems, and decoders that read a source solution back
// out of a stable outcome.

#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hdg/families.hpp"
#include "hdg/stability.hpp"

namespace hdg {

/// A generated instance plus what is needed to inspect its trap gadget.
struct Reduction {
    Instance instance;
    std::vector<AgentId> greens;  // empty when the construction has no gadget
    std::optional<AgentId> red;
    std::optional<AgentId> blue;
    std::shared_ptr<const PaletteSet> desirable;

    /// Whether every green agent sits in a desirable coalition.
    bool greens_satisfied(const Outcome& outcome) const;
};

// ---- Exact cover by 3-sets -------------------------------------------------

struct X3CInput {
    int universe = 0;  // elements are 0..universe-1
    std::vector<std::array<int, 3>> sets;
};

Reduction from_x3c(const X3CInput& in);
std::optional<std::vector<int>> x3c_decide(const X3CInput& in);
std::vector<int> decode_x3c(const X3CInput& in, const Reduction& red, const Outcome& outcome);
bool is_exact_cover(const X3CInput& in, const std::vector<int>& chosen);

// ---- Partition --------------------------------------------------------------

/// The same gadget-based construction serves both notions.
Reduction from_partition(const std::vector<int>& numbers, Notion notion);
std::optional<std::vector<int>> partition_decide(const std::vector<int>& numbers);  // indices of one half
std::vector<int> decode_partition(const std::vector<int>& numbers, const Reduction& red, const Outcome& outcome);

// ---- Multidimensional subset sum (one vector per group) ---------------------

struct MssInput {
    std::vector<std::vector<std::vector<int>>> sets;  // sets[i] = vectors of group i
    std::vector<int> target;
};

Reduction from_mss(const MssInput& in);
std::optional<std::vector<int>> mss_decide(const MssInput& in);  // chosen vector per group
std::vector<int> decode_mss(const MssInput& in, const Reduction& red, const Outcome& outcome);

// ---- Independent set ----------------------------------------------------------

struct IndSetInput {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    int k = 0;
};

Reduction from_independent_set(const IndSetInput& in);
std::optional<std::vector<int>> indset_decide(const IndSetInput& in);
std::vector<int> decode_independent_set(const IndSetInput& in, const Reduction& red, const Outcome& outcome);

// ---- Simple group activity selection ---------------------------------------

struct SGaspInstance {
    int participants = 0;
    int activities = 0;
    std::vector<std::vector<std::pair<int, int>>> approved;  // per participant: (activity, group size)
    std::optional<int> s;  // set on normalized instances

    /// Throws InvalidInput on out-of-range activities or sizes.
    void validate() const;
};

/// Equivalent instance whose approved sizes are all odd and lie in
/// [2s|A|+1, 2s|A|+2s-1] with s = |P|+1.
SGaspInstance gasp_normalize(const SGaspInstance& in);
/// Activity per participant, found by trying every vector of group sizes
/// and matching participants to activities with max flow.
std::optional<std::vector<int>> sgasp_decide(const SGaspInstance& in);
bool is_gasp_solution(const SGaspInstance& in, const std::vector<int>& assignment);

/// Size and preference parameters of the two-color construction.
struct SGaspLayout {
    int s = 0;
    std::vector<int> z;      // markers per activity
    std::vector<int> r_cap;  // red bound of the split ratios per activity
    int t_lo = 0, t_hi = 0;  // approved group sizes range
    long long spoilers = 0;
    static SGaspLayout of(int activities, int s);
};

/// Two colors: red = 0, blue = 1. Agents: normals (blue, one per
/// participant), then markers per activity, then spoilers.
Instance from_sgasp(const SGaspInstance& in, bool normalized);

}  // namespace hdg
