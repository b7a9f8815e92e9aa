#pragma once

// Named preference families. Each family is a weak order over palettes
// described by a small parameter object, so that orders whose explicit tier
// lists would be exponentially long stay polynomial in size.
//
// Registered families:
//   own-ratio     {color, tiers: [[[r,s],...],...]}     order on the share of `color`
//   approved-set  {approved: <set>}                     approved > any single-color palette > rest
//   marker-count  {markers: [c,...]}                    one marker color > none > several
//   trap-gadget   {role, red, blue, green, m, desirable: <set>}
//   spoiler       {red, blue, z: [...], r_cap: [...], t_lo, t_hi}
//
// Palette sets (<set>):
//   {kind: explicit, palettes: [[...],...]}
//   {kind: linear-count, anchor, weights: [...], target}
//   {kind: independent-set, guard, vertices: [...], edges: [[u,v],...], k}

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hdg/core.hpp"

namespace hdg {

/// Membership predicate over palettes.
class PaletteSet {
public:
    virtual ~PaletteSet() = default;
    virtual bool contains(const Palette& p) const = 0;
    virtual Json to_json() const = 0;
};

std::shared_ptr<const PaletteSet> make_palette_set(const Json& spec, int gamma);

using FamilyFactory = std::function<std::shared_ptr<const Ranker>(const Json& params, int gamma)>;

void register_family(const std::string& name, FamilyFactory factory);
std::shared_ptr<const Ranker> make_family(const std::string& name, const Json& params, int gamma);
std::vector<std::string> registered_families();

/// Small-split ratios used by the spoiler agents of the two-color
/// construction, as reduced (red, blue) count pairs.
std::set<std::pair<int, int>> spoiler_split_ratios(const std::vector<int>& z, const std::vector<int>& r_cap,
                                                   int t_lo, int t_hi);

}  // namespace hdg
