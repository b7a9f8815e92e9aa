#include "hdg/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hdg/families.hpp"

namespace hdg {

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
    }
    return "?";
}

const char* to_string(Notion n) { return n == Notion::NS ? "NS" : "IS"; }

Notion parse_notion(const std::string& s) {
    if (s == "ns" || s == "NS" || s == "nash") return Notion::NS;
    if (s == "is" || s == "IS" || s == "individual") return Notion::IS;
    throw InvalidInput("unknown stability notion '" + s + "'");
}

Ratio::Ratio(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0 || numerator < 0) throw InvalidInput("ratio must be non-negative with positive denominator");
    const std::int64_t g = std::gcd(numerator, denominator);
    num = numerator / g;
    den = denominator / g;
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
}

Composition::Composition(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0) throw InvalidInput("composition counts must be non-negative");
        size_ += c;
    }
}

void Composition::add(ColorId c, int k) {
    if (c < 0 || c >= gamma()) throw DimensionMismatch("color " + std::to_string(c) + " out of range");
    counts_[static_cast<std::size_t>(c)] += k;
    size_ += k;
}

Composition Composition::plus(ColorId c) const {
    Composition out = *this;
    out.add(c);
    return out;
}

Composition Composition::plus(const Composition& other) const {
    if (other.gamma() != gamma()) throw DimensionMismatch("composition dimension mismatch");
    Composition out = *this;
    for (int c = 0; c < gamma(); ++c) out.add(c, other.count(c));
    return out;
}

Palette Composition::palette() const { return Palette::from_counts(counts_); }

Composition add_agent(const Composition& comp, ColorId color) { return comp.plus(color); }

Palette Palette::from_counts(std::span<const int> counts) {
    int g = 0;
    int total = 0;
    for (int c : counts) {
        if (c < 0) throw InvalidInput("palette counts must be non-negative");
        g = std::gcd(g, c);
        total += c;
    }
    if (total == 0) throw EmptyCoalition("palette of an empty coalition");
    Palette p;
    p.counts_.assign(counts.begin(), counts.end());
    for (int& c : p.counts_) c /= g;
    p.total_ = total / g;
    return p;
}

Palette Palette::unit(int gamma, ColorId c) {
    if (c < 0 || c >= gamma) throw DimensionMismatch("color out of range");
    std::vector<int> counts(static_cast<std::size_t>(gamma), 0);
    counts[static_cast<std::size_t>(c)] = 1;
    return from_counts(counts);
}

int Palette::support() const {
    return static_cast<int>(std::count_if(counts_.begin(), counts_.end(), [](int c) { return c > 0; }));
}

std::string Palette::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) os << ',';
        if (counts_[i] == 0) {
            os << '0';
        } else if (counts_[i] == total_) {
            os << '1';
        } else {
            const Ratio r(counts_[i], total_);
            os << r.num << '/' << r.den;
        }
    }
    os << ')';
    return os.str();
}

std::size_t PaletteHash::operator()(const Palette& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int c : p.counts()) {
        h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool Ranker::own_color_for(ColorId) const { return gamma() <= 2; }

namespace {

class TierListRanker final : public Ranker {
public:
    TierListRanker(int gamma, PreferenceOrder::Tiers tiers) : gamma_(gamma), tiers_(std::move(tiers)) {
        const int levels = static_cast<int>(tiers_.size());
        for (int i = 0; i < levels; ++i) {
            for (const Palette& p : tiers_[static_cast<std::size_t>(i)]) {
                if (p.gamma() != gamma_) throw DimensionMismatch("tier palette has wrong dimension");
                if (!level_.emplace(p, levels - i).second) {
                    throw InvalidInput("palette " + p.str() + " appears in two tiers");
                }
            }
        }
    }

    int rank(const Palette& p) const override {
        auto it = level_.find(p);
        return it == level_.end() ? 0 : it->second;
    }

    std::string family() const override { return "tiers"; }

    Json params() const override {
        Json out = Json::array();
        for (const auto& tier : tiers_) {
            Json t = Json::array();
            for (const Palette& p : tier) t.push_back(p.counts());
            out.push_back(std::move(t));
        }
        return out;
    }

    int gamma() const override { return gamma_; }

    bool own_color_for(ColorId c) const override {
        if (gamma_ <= 2) return true;
        // Any listed palette mixing c with other colors shares its c-share with
        // infinitely many unlisted (bottom) palettes.
        for (const auto& [p, lvl] : level_) {
            if (p.contains(c) && p.count(c) != p.total()) return false;
        }
        return true;
    }

    const PreferenceOrder::Tiers& tiers() const { return tiers_; }

private:
    int gamma_;
    PreferenceOrder::Tiers tiers_;
    std::unordered_map<Palette, int, PaletteHash> level_;
};

}  // namespace

PreferenceOrder PreferenceOrder::tier_list(int gamma, Tiers tiers) {
    return PreferenceOrder(std::make_shared<TierListRanker>(gamma, std::move(tiers)));
}

PreferenceOrder PreferenceOrder::named(const std::string& family, const Json& params, int gamma) {
    if (family == "tiers") {
        Tiers tiers;
        for (const auto& tier : params) {
            std::vector<Palette> ps;
            for (const auto& counts : tier) ps.push_back(Palette::from_counts(counts.get<std::vector<int>>()));
            tiers.push_back(std::move(ps));
        }
        return tier_list(gamma, std::move(tiers));
    }
    return PreferenceOrder(make_family(family, params, gamma));
}

PreferenceOrder PreferenceOrder::from_ranker(std::shared_ptr<const Ranker> ranker) {
    if (!ranker) throw InvalidInput("null preference backend");
    return PreferenceOrder(std::move(ranker));
}

bool PreferenceOrder::is_tier_list() const { return dynamic_cast<const TierListRanker*>(impl_.get()) != nullptr; }

const PreferenceOrder::Tiers& PreferenceOrder::tiers() const {
    const auto* t = dynamic_cast<const TierListRanker*>(impl_.get());
    if (!t) throw InvalidInput("preference order is not a tier list");
    return t->tiers();
}

int PreferenceOrder::rank(const Palette& p) const {
    if (p.gamma() != impl_->gamma()) throw DimensionMismatch("palette has wrong dimension");
    return impl_->rank(p);
}

Ordering PreferenceOrder::compare(const Palette& p, const Palette& q) const {
    const int a = rank(p);
    const int b = rank(q);
    return a < b ? Ordering::Less : (a > b ? Ordering::Greater : Ordering::Equal);
}

bool PreferenceOrder::same_as(const PreferenceOrder& other) const {
    if (impl_ == other.impl_) return true;
    if (family() != other.family() || gamma() != other.gamma()) return false;
    if (is_tier_list()) {
        // Tier contents are sets; compare them order-insensitively.
        const auto& a = tiers();
        const auto& b = other.tiers();
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto x = a[i];
            auto y = b[i];
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            if (x != y) return false;
        }
        return true;
    }
    return params() == other.params();
}

void Budgets::validate(int n) const {
    if (sigma < 1 || sigma > n) throw InvalidInput("sigma must lie in [1, n]");
    if (rho1 < 1 || rho1 > n) throw InvalidInput("rho1 must lie in [1, n]");
    if (rho2 < 0 || rho2 > rho1) throw InvalidInput("rho2 must lie in [0, rho1]");
}

Instance::Instance(int gamma, std::vector<ColorId> color_of, std::vector<TypeId> type_of,
                   std::vector<PreferenceOrder> prefs, std::optional<Budgets> budgets,
                   std::vector<std::string> names)
    : gamma_(gamma),
      color_of_(std::move(color_of)),
      type_of_(std::move(type_of)),
      prefs_(std::move(prefs)),
      names_(std::move(names)) {
    if (gamma_ < 1) throw InvalidInput("gamma must be at least 1");
    if (color_of_.empty()) throw InvalidInput("instance needs at least one agent");
    if (type_of_.size() != color_of_.size()) throw InvalidInput("every agent needs exactly one color and one type");
    if (!names_.empty() && names_.size() != color_of_.size()) throw InvalidInput("agent name list has wrong length");
    for (const auto& p : prefs_) {
        if (p.gamma() != gamma_) throw DimensionMismatch("preference order defined over the wrong number of colors");
    }
    class_sizes_.assign(static_cast<std::size_t>(gamma_), 0);
    pair_counts_.assign(static_cast<std::size_t>(gamma_) * prefs_.size(), 0);
    for (std::size_t a = 0; a < color_of_.size(); ++a) {
        const int c = color_of_[a];
        const int t = type_of_[a];
        if (c < 0 || c >= gamma_) throw InvalidInput("agent " + std::to_string(a) + " has an invalid color");
        if (t < 0 || t >= num_types()) throw InvalidInput("agent " + std::to_string(a) + " has a type without preferences");
        ++class_sizes_[static_cast<std::size_t>(c)];
        ++pair_counts_[static_cast<std::size_t>(c) * prefs_.size() + static_cast<std::size_t>(t)];
    }
    budgets_ = budgets.value_or(Budgets::unrestricted(n()));
    budgets_.validate(n());
}

std::string Instance::agent_name(AgentId a) const {
    if (!names_.empty()) return names_.at(static_cast<std::size_t>(a));
    return std::to_string(a);
}

Instance Instance::with_budgets(const Budgets& b) const {
    Instance out = *this;
    b.validate(n());
    out.budgets_ = b;
    return out;
}

int Instance::pair_count(ColorId c, TypeId t) const {
    if (c < 0 || c >= gamma_ || t < 0 || t >= num_types()) return 0;
    return pair_counts_[static_cast<std::size_t>(c) * prefs_.size() + static_cast<std::size_t>(t)];
}

std::vector<AgentId> Instance::agents_of(ColorId c, TypeId t) const {
    std::vector<AgentId> out;
    for (int a = 0; a < n(); ++a) {
        if (color_of(a) == c && type_of(a) == t) out.push_back(a);
    }
    return out;
}

Composition composition_of(std::span<const AgentId> coalition, const Instance& inst) {
    Composition comp(inst.gamma());
    for (AgentId a : coalition) {
        if (a < 0 || a >= inst.n()) throw InvalidInput("agent id " + std::to_string(a) + " out of range");
        comp.add(inst.color_of(a));
    }
    return comp;
}

Palette palette_of(std::span<const AgentId> coalition, const Instance& inst) {
    if (coalition.empty()) throw EmptyCoalition("palette of an empty coalition");
    return composition_of(coalition, inst).palette();
}

Ordering compare(const Instance& inst, TypeId type, const Palette& p, const Palette& q) {
    if (p.gamma() != inst.gamma() || q.gamma() != inst.gamma()) throw DimensionMismatch("palette has wrong dimension");
    return inst.pref(type).compare(p, q);
}

Instance merge_identical_types(const Instance& inst) {
    std::vector<PreferenceOrder> kept;
    std::vector<TypeId> remap(static_cast<std::size_t>(inst.num_types()), -1);
    for (TypeId t = 0; t < inst.num_types(); ++t) {
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (kept[k].same_as(inst.pref(t))) {
                remap[static_cast<std::size_t>(t)] = static_cast<TypeId>(k);
                break;
            }
        }
        if (remap[static_cast<std::size_t>(t)] < 0) {
            remap[static_cast<std::size_t>(t)] = static_cast<TypeId>(kept.size());
            kept.push_back(inst.pref(t));
        }
    }
    std::vector<TypeId> types;
    types.reserve(static_cast<std::size_t>(inst.n()));
    for (TypeId t : inst.types()) types.push_back(remap[static_cast<std::size_t>(t)]);
    return Instance(inst.gamma(), inst.colors(), std::move(types), std::move(kept), inst.budgets(), inst.names());
}

bool is_own_color(const Instance& inst) {
    std::vector<std::vector<bool>> checked(static_cast<std::size_t>(inst.num_types()),
                                           std::vector<bool>(static_cast<std::size_t>(inst.gamma()), false));
    for (AgentId a = 0; a < inst.n(); ++a) {
        const auto t = static_cast<std::size_t>(inst.type_of(a));
        const auto c = static_cast<std::size_t>(inst.color_of(a));
        if (checked[t][c]) continue;
        checked[t][c] = true;
        if (!inst.pref(inst.type_of(a)).own_color_for(inst.color_of(a))) return false;
    }
    return true;
}

void require_own_color(const Instance& inst) {
    for (AgentId a = 0; a < inst.n(); ++a) {
        if (!inst.pref(inst.type_of(a)).own_color_for(inst.color_of(a))) {
            throw OwnColorViolation("agent " + inst.agent_name(a) + " (type " + std::to_string(inst.type_of(a)) +
                                    ") has preferences that depend on more than its own color share");
        }
    }
}

Palette own_share_palette(int gamma, ColorId c, int r, int s) {
    if (r < 0 || s < 1 || r > s) throw InvalidInput("own share must satisfy 0 <= r <= s, s >= 1");
    std::vector<int> counts(static_cast<std::size_t>(gamma), 0);
    counts[static_cast<std::size_t>(c)] = r;
    if (s > r) {
        if (gamma < 2) throw InvalidInput("a one-color game has no mixed coalitions");
        counts[static_cast<std::size_t>((c + 1) % gamma)] = s - r;
    }
    return Palette::from_counts(counts);
}

}  // namespace hdg
