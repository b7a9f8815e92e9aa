#include "hdg/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace hdg {

namespace {

int get_color(const Json& params, const char* key, int gamma) {
    if (!params.contains(key)) throw InvalidInput(std::string("missing family parameter '") + key + "'");
    const int c = params.at(key).get<int>();
    if (c < 0 || c >= gamma) throw InvalidInput(std::string("family parameter '") + key + "' is not a valid color");
    return c;
}

class ExplicitSet final : public PaletteSet {
public:
    ExplicitSet(const Json& spec, int gamma) {
        for (const auto& counts : spec.at("palettes")) {
            const Palette p = Palette::from_counts(counts.get<std::vector<int>>());
            if (p.gamma() != gamma) throw DimensionMismatch("explicit palette set: wrong dimension");
            if (members_.insert(p).second) order_.push_back(p);
        }
    }
    bool contains(const Palette& p) const override { return members_.count(p) > 0; }
    Json to_json() const override {
        Json ps = Json::array();
        for (const auto& p : order_) ps.push_back(p.counts());
        return Json{{"kind", "explicit"}, {"palettes", ps}};
    }

private:
    std::unordered_set<Palette, PaletteHash> members_;
    std::vector<Palette> order_;
};

// Coalitions with exactly one anchor agent whose weighted color count
// equals the target; colors with negative weight must be absent.
class LinearCountSet final : public PaletteSet {
public:
    LinearCountSet(const Json& spec, int gamma)
        : anchor_(get_color(spec, "anchor", gamma)),
          weights_(spec.at("weights").get<std::vector<int>>()),
          target_(spec.at("target").get<long long>()) {
        if (static_cast<int>(weights_.size()) != gamma) throw DimensionMismatch("linear-count weights have wrong length");
    }
    bool contains(const Palette& p) const override {
        if (p.count(anchor_) != 1) return false;
        long long sum = 0;
        for (int c = 0; c < p.gamma(); ++c) {
            if (c == anchor_) continue;
            const int w = weights_[static_cast<std::size_t>(c)];
            if (w < 0) {
                if (p.count(c) != 0) return false;
            } else {
                sum += static_cast<long long>(w) * p.count(c);
            }
        }
        return sum == target_;
    }
    Json to_json() const override {
        return Json{{"kind", "linear-count"}, {"anchor", anchor_}, {"weights", weights_}, {"target", target_}};
    }

private:
    int anchor_;
    std::vector<int> weights_;
    long long target_;
};

// Guard plus exactly k pairwise non-adjacent vertex colors, one agent each.
class IndependentSetSet final : public PaletteSet {
public:
    IndependentSetSet(const Json& spec, int gamma)
        : guard_(get_color(spec, "guard", gamma)),
          vertices_(spec.at("vertices").get<std::vector<int>>()),
          edges_(spec.at("edges").get<std::vector<std::pair<int, int>>>()),
          k_(spec.at("k").get<int>()),
          vertex_index_(static_cast<std::size_t>(gamma), -1) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const int c = vertices_[i];
            if (c < 0 || c >= gamma) throw InvalidInput("independent-set vertex color out of range");
            vertex_index_[static_cast<std::size_t>(c)] = static_cast<int>(i);
        }
        for (auto [u, v] : edges_) {
            if (u < 0 || v < 0 || u >= gamma || v >= gamma) throw InvalidInput("independent-set edge out of range");
        }
    }
    bool contains(const Palette& p) const override {
        if (p.count(guard_) != 1 || p.total() != k_ + 1) return false;
        int chosen = 0;
        for (int c = 0; c < p.gamma(); ++c) {
            if (c == guard_ || p.count(c) == 0) continue;
            if (vertex_index_[static_cast<std::size_t>(c)] < 0 || p.count(c) != 1) return false;
            ++chosen;
        }
        if (chosen != k_) return false;
        return std::none_of(edges_.begin(), edges_.end(), [&](const auto& e) {
            return p.count(e.first) > 0 && p.count(e.second) > 0;
        });
    }
    Json to_json() const override {
        return Json{{"kind", "independent-set"}, {"guard", guard_}, {"vertices", vertices_}, {"edges", edges_}, {"k", k_}};
    }

private:
    int guard_;
    std::vector<int> vertices_;
    std::vector<std::pair<int, int>> edges_;
    int k_;
    std::vector<int> vertex_index_;
};

class OwnRatioRanker final : public Ranker {
public:
    OwnRatioRanker(const Json& params, int gamma) : gamma_(gamma), color_(get_color(params, "color", gamma)), params_(params) {
        const auto& tiers = params.at("tiers");
        const int levels = static_cast<int>(tiers.size());
        for (int i = 0; i < levels; ++i) {
            for (const auto& frac : tiers.at(static_cast<std::size_t>(i))) {
                const Ratio r(frac.at(0).get<std::int64_t>(), frac.at(1).get<std::int64_t>());
                if (r.num > r.den) throw InvalidInput("own-ratio share exceeds 1");
                if (!level_.emplace(r, levels - i).second) throw InvalidInput("own-ratio share listed twice");
            }
        }
    }
    int rank(const Palette& p) const override {
        auto it = level_.find(p.share(color_));
        return it == level_.end() ? 0 : it->second;
    }
    std::string family() const override { return "own-ratio"; }
    Json params() const override { return params_; }
    int gamma() const override { return gamma_; }
    bool own_color_for(ColorId c) const override { return gamma_ <= 2 || c == color_; }

private:
    int gamma_;
    int color_;
    Json params_;
    std::map<Ratio, int> level_;
};

class ApprovedSetRanker final : public Ranker {
public:
    ApprovedSetRanker(const Json& params, int gamma)
        : gamma_(gamma), approved_(make_palette_set(params.at("approved"), gamma)) {}
    int rank(const Palette& p) const override {
        if (approved_->contains(p)) return 2;
        return p.support() == 1 ? 1 : 0;
    }
    std::string family() const override { return "approved-set"; }
    Json params() const override { return Json{{"approved", approved_->to_json()}}; }
    int gamma() const override { return gamma_; }

private:
    int gamma_;
    std::shared_ptr<const PaletteSet> approved_;
};

class MarkerCountRanker final : public Ranker {
public:
    MarkerCountRanker(const Json& params, int gamma)
        : gamma_(gamma), markers_(params.at("markers").get<std::vector<int>>()) {
        for (int c : markers_) {
            if (c < 0 || c >= gamma) throw InvalidInput("marker color out of range");
        }
    }
    int rank(const Palette& p) const override {
        const auto present = std::count_if(markers_.begin(), markers_.end(), [&](int c) { return p.count(c) > 0; });
        if (present == 1) return 2;
        return present == 0 ? 1 : 0;
    }
    std::string family() const override { return "marker-count"; }
    Json params() const override { return Json{{"markers", markers_}}; }
    int gamma() const override { return gamma_; }

private:
    int gamma_;
    std::vector<int> markers_;
};

class TrapGadgetRanker final : public Ranker {
public:
    enum class Role { Red, Blue, Green };

    TrapGadgetRanker(const Json& params, int gamma)
        : gamma_(gamma),
          red_(get_color(params, "red", gamma)),
          blue_(get_color(params, "blue", gamma)),
          green_(get_color(params, "green", gamma)),
          m_(params.at("m").get<int>()),
          desirable_(make_palette_set(params.at("desirable"), gamma)) {
        const auto role = params.at("role").get<std::string>();
        if (role == "red") {
            role_ = Role::Red;
        } else if (role == "blue") {
            role_ = Role::Blue;
        } else if (role == "green") {
            role_ = Role::Green;
        } else {
            throw InvalidInput("unknown trap-gadget role '" + role + "'");
        }
        if (m_ < 1) throw InvalidInput("trap gadget needs at least one green agent");
    }

    int rank(const Palette& p) const override {
        switch (role_) {
            case Role::Red:
                if (is_red_blue(p)) return m_ + 2;
                if (int j = greens_with(p, red_); j > 0) return 1 + j;
                return only(p, red_) ? 1 : 0;
            case Role::Blue:
                if (int j = greens_with(p, blue_); j > 0) return 2 + j;
                if (is_red_blue(p)) return 2;
                return only(p, blue_) ? 1 : 0;
            case Role::Green:
                if (desirable_->contains(p)) return 2 * m_ + 2;
                if (int j = greens_with(p, red_); j > 0) return m_ + 1 + j;
                if (int j = greens_with(p, blue_); j > 0) return 1 + j;
                return only(p, green_) ? 1 : 0;
        }
        return 0;
    }

    std::string family() const override { return "trap-gadget"; }
    Json params() const override {
        static const char* names[] = {"red", "blue", "green"};
        return Json{{"role", names[static_cast<int>(role_)]}, {"red", red_}, {"blue", blue_}, {"green", green_},
                    {"m", m_}, {"desirable", desirable_->to_json()}};
    }
    int gamma() const override { return gamma_; }

private:
    bool only(const Palette& p, int c) const { return p.count(c) == p.total(); }
    bool is_red_blue(const Palette& p) const { return p.total() == 2 && p.count(red_) == 1 && p.count(blue_) == 1; }
    // j if the palette is j greens plus one agent of color `partner` (1 <= j <= m), else 0.
    int greens_with(const Palette& p, int partner) const {
        if (p.count(partner) != 1) return 0;
        const int j = p.count(green_);
        if (j < 1 || j > m_ || p.total() != j + 1) return 0;
        return j;
    }

    int gamma_;
    int red_, blue_, green_, m_;
    Role role_ = Role::Green;
    std::shared_ptr<const PaletteSet> desirable_;
};

class SpoilerRanker final : public Ranker {
public:
    SpoilerRanker(const Json& params, int gamma)
        : gamma_(gamma),
          red_(get_color(params, "red", gamma)),
          blue_(get_color(params, "blue", gamma)),
          z_(params.at("z").get<std::vector<int>>()),
          r_cap_(params.at("r_cap").get<std::vector<int>>()),
          t_lo_(params.at("t_lo").get<int>()),
          t_hi_(params.at("t_hi").get<int>()) {
        if (z_.size() != r_cap_.size()) throw InvalidInput("spoiler: z and r_cap differ in length");
        split_ = spoiler_split_ratios(z_, r_cap_, t_lo_, t_hi_);
    }
    int rank(const Palette& p) const override {
        const int r = p.count(red_);
        const int b = p.count(blue_);
        if (r + b != p.total()) return 0;
        if (r == 1 && b >= 1) return 3;
        if (split_.count({r, b})) return 2;
        return b == 0 ? 1 : 0;
    }
    std::string family() const override { return "spoiler"; }
    Json params() const override {
        return Json{{"red", red_}, {"blue", blue_}, {"z", z_}, {"r_cap", r_cap_}, {"t_lo", t_lo_}, {"t_hi", t_hi_}};
    }
    int gamma() const override { return gamma_; }
    const std::set<std::pair<int, int>>& split() const { return split_; }

private:
    int gamma_;
    int red_, blue_;
    std::vector<int> z_, r_cap_;
    int t_lo_, t_hi_;
    std::set<std::pair<int, int>> split_;
};

std::map<std::string, FamilyFactory>& registry() {
    static std::map<std::string, FamilyFactory> r = {
        {"own-ratio", [](const Json& p, int g) { return std::make_shared<OwnRatioRanker>(p, g); }},
        {"approved-set", [](const Json& p, int g) { return std::make_shared<ApprovedSetRanker>(p, g); }},
        {"marker-count", [](const Json& p, int g) { return std::make_shared<MarkerCountRanker>(p, g); }},
        {"trap-gadget", [](const Json& p, int g) { return std::make_shared<TrapGadgetRanker>(p, g); }},
        {"spoiler", [](const Json& p, int g) { return std::make_shared<SpoilerRanker>(p, g); }},
    };
    return r;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::shared_ptr<const PaletteSet> make_palette_set(const Json& spec, int gamma) {
    const auto kind = spec.at("kind").get<std::string>();
    if (kind == "explicit") return std::make_shared<ExplicitSet>(spec, gamma);
    if (kind == "linear-count") return std::make_shared<LinearCountSet>(spec, gamma);
    if (kind == "independent-set") return std::make_shared<IndependentSetSet>(spec, gamma);
    throw InvalidInput("unknown palette set kind '" + kind + "'");
}

void register_family(const std::string& name, FamilyFactory factory) {
    std::lock_guard lock(registry_mutex());
    registry()[name] = std::move(factory);
}

std::shared_ptr<const Ranker> make_family(const std::string& name, const Json& params, int gamma) {
    FamilyFactory f;
    {
        std::lock_guard lock(registry_mutex());
        auto it = registry().find(name);
        if (it == registry().end()) throw InvalidInput("unknown preference family '" + name + "'");
        f = it->second;
    }
    try {
        return f(params, gamma);
    } catch (const Json::exception& e) {
        throw InvalidInput("bad parameters for family '" + name + "': " + e.what());
    }
}

std::vector<std::string> registered_families() {
    std::lock_guard lock(registry_mutex());
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

std::set<std::pair<int, int>> spoiler_split_ratios(const std::vector<int>& z, const std::vector<int>& r_cap, int t_lo,
                                                   int t_hi) {
    std::set<std::pair<int, int>> out;
    for (std::size_t i = 0; i < z.size(); ++i) {
        for (int t = t_lo; t <= t_hi; ++t) {
            if (t % 2 == 0) continue;
            const int g = std::gcd(z[i], t);
            const int r0 = z[i] / g;
            const int b0 = t / g;
            // r / (r + b) = z / (z + t) forces (r, b) to be a multiple of (r0, b0).
            for (int mult = 1; mult * r0 <= r_cap[i]; ++mult) {
                const int red = mult * r0 + 1;
                const int blue = mult * b0;
                const int h = std::gcd(red, blue);
                out.emplace(red / h, blue / h);
            }
        }
    }
    return out;
}

}  // namespace hdg
