#include "hdg/random_instances.hpp"

#include <algorithm>
#include <set>

namespace hdg {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Palette> palettes_up_to(int gamma, int n) {
    std::set<Palette> out;
    std::vector<int> counts(static_cast<std::size_t>(gamma), 0);
    auto rec = [&](auto&& self, int c, int left) -> void {
        if (c == gamma) {
            if (left < n) out.insert(Palette::from_counts(counts));
            return;
        }
        for (int k = 0; k <= left; ++k) {
            counts[static_cast<std::size_t>(c)] = k;
            self(self, c + 1, left - k);
        }
    };
    rec(rec, 0, n);
    return {out.begin(), out.end()};
}

PreferenceOrder random_tiers(std::mt19937_64& rng, const std::vector<Palette>& universe, int gamma) {
    std::vector<Palette> pool = universe;
    std::shuffle(pool.begin(), pool.end(), rng);
    const int listed = uniform(rng, 0, std::min<int>(7, static_cast<int>(pool.size())));
    const int num_tiers = listed == 0 ? 0 : uniform(rng, 1, std::min(4, listed));
    PreferenceOrder::Tiers tiers(static_cast<std::size_t>(num_tiers));
    for (int i = 0; i < listed; ++i) {
        // The first palettes seed each tier so none stays empty.
        const int t = i < num_tiers ? i : uniform(rng, 0, num_tiers - 1);
        tiers[static_cast<std::size_t>(t)].push_back(pool[static_cast<std::size_t>(i)]);
    }
    return PreferenceOrder::tier_list(gamma, std::move(tiers));
}

PreferenceOrder random_own_ratio(std::mt19937_64& rng, ColorId color, int n, int gamma) {
    std::set<Ratio> shares;
    for (int s = 1; s <= n; ++s) {
        for (int r = 1; r <= s; ++r) shares.insert(Ratio(r, s));
    }
    std::vector<Ratio> pool(shares.begin(), shares.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    const int listed = uniform(rng, 0, std::min<int>(6, static_cast<int>(pool.size())));
    const int num_tiers = listed == 0 ? 0 : uniform(rng, 1, std::min(4, listed));
    Json tiers = Json::array();
    for (int t = 0; t < num_tiers; ++t) tiers.push_back(Json::array());
    for (int i = 0; i < listed; ++i) {
        const int t = i < num_tiers ? i : uniform(rng, 0, num_tiers - 1);
        tiers[static_cast<std::size_t>(t)].push_back(Json::array({pool[static_cast<std::size_t>(i)].num, pool[static_cast<std::size_t>(i)].den}));
    }
    return PreferenceOrder::named("own-ratio", Json{{"color", color}, {"tiers", tiers}}, gamma);
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, const RandomCaps& caps) {
    const int n = uniform(rng, 1, caps.max_n);
    const int gamma = uniform(rng, 1, caps.max_gamma);
    const bool own = uniform(rng, 0, 2) == 0;

    std::vector<ColorId> color_of(static_cast<std::size_t>(n));
    for (auto& c : color_of) c = uniform(rng, 0, gamma - 1);
    std::vector<TypeId> type_of(static_cast<std::size_t>(n));
    std::vector<PreferenceOrder> prefs;

    if (own && gamma >= 3) {
        // own-ratio orders are anchored on one color, so agents only share
        // a type with agents of the same color.
        std::vector<std::vector<TypeId>> per_color(static_cast<std::size_t>(gamma));
        for (int a = 0; a < n; ++a) {
            const ColorId c = color_of[static_cast<std::size_t>(a)];
            auto& ts = per_color[static_cast<std::size_t>(c)];
            const int budget = caps.max_types - static_cast<int>(prefs.size());
            if (ts.empty() || (budget > 0 && uniform(rng, 0, 1) == 0)) {
                if (budget <= 0 && !ts.empty()) {
                    type_of[static_cast<std::size_t>(a)] = ts[0];
                    continue;
                }
                if (budget <= 0) {
                    // Out of fresh types: recolor into a color that has one.
                    for (ColorId d = 0; d < gamma; ++d) {
                        if (!per_color[static_cast<std::size_t>(d)].empty()) {
                            color_of[static_cast<std::size_t>(a)] = d;
                            type_of[static_cast<std::size_t>(a)] = per_color[static_cast<std::size_t>(d)][0];
                            break;
                        }
                    }
                    continue;
                }
                ts.push_back(static_cast<TypeId>(prefs.size()));
                prefs.push_back(random_own_ratio(rng, c, n, gamma));
            }
            type_of[static_cast<std::size_t>(a)] = ts[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ts.size()) - 1))];
        }
    } else {
        const int tau = uniform(rng, 1, std::min(caps.max_types, n));
        const auto universe = palettes_up_to(gamma, n);
        for (int t = 0; t < tau; ++t) prefs.push_back(random_tiers(rng, universe, gamma));
        for (auto& t : type_of) t = uniform(rng, 0, tau - 1);
    }

    Budgets b;
    b.sigma = uniform(rng, 1, std::min(caps.max_sigma, n));
    b.rho1 = uniform(rng, 1, std::min(caps.max_rho1, n));
    b.rho2 = uniform(rng, 0, std::min(caps.max_rho2, b.rho1));
    if (uniform(rng, 0, 3) == 0) b = {std::min(caps.max_sigma, n), std::min(caps.max_rho1, n), std::min(caps.max_rho2, std::min(caps.max_rho1, n))};
    return merge_identical_types(Instance(gamma, std::move(color_of), std::move(type_of), std::move(prefs), b));
}

}  // namespace hdg
