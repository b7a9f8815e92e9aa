#pragma once

// Instance model for hedonic diversity games: palettes, compositions,
// preference orders and the comparison oracle used by every solver.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hdg {

using AgentId = int;
using ColorId = int;
using TypeId = int;
using Json = nlohmann::json;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HDG_DECLARE_ERROR(Name)              \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

HDG_DECLARE_ERROR(InvalidInput);
HDG_DECLARE_ERROR(EmptyCoalition);
HDG_DECLARE_ERROR(DimensionMismatch);
HDG_DECLARE_ERROR(InvalidOutcome);
HDG_DECLARE_ERROR(InstanceTooLarge);
HDG_DECLARE_ERROR(SearchSpaceTooLarge);
HDG_DECLARE_ERROR(OwnColorViolation);
HDG_DECLARE_ERROR(ParseError);

#undef HDG_DECLARE_ERROR

enum class Ordering { Less, Equal, Greater };
enum class Notion { NS, IS };

const char* to_string(Ordering o);
const char* to_string(Notion n);
Notion parse_notion(const std::string& s);

/// Exact non-negative rational, always stored in lowest terms.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t numerator, std::int64_t denominator);

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);
};

class Palette;

/// Absolute per-color head counts of a (possibly hypothetical) coalition.
class Composition {
public:
    Composition() = default;
    explicit Composition(int gamma) : counts_(static_cast<std::size_t>(gamma), 0) {}
    explicit Composition(std::vector<int> counts);

    int gamma() const { return static_cast<int>(counts_.size()); }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    int count(ColorId c) const { return counts_.at(static_cast<std::size_t>(c)); }
    const std::vector<int>& counts() const { return counts_; }

    void add(ColorId c, int k = 1);
    Composition plus(ColorId c) const;
    Composition plus(const Composition& other) const;

    /// Reduced palette; throws EmptyCoalition on the empty composition.
    Palette palette() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.counts_ <=> b.counts_; }

private:
    std::vector<int> counts_;
    int size_ = 0;
};

Composition add_agent(const Composition& comp, ColorId color);

/// Color-count vector divided by the gcd of its entries. Two coalitions
/// with proportional compositions share the same Palette.
class Palette {
public:
    Palette() = default;
    static Palette from_counts(std::span<const int> counts);
    static Palette unit(int gamma, ColorId c);

    int gamma() const { return static_cast<int>(counts_.size()); }
    int count(ColorId c) const { return counts_.at(static_cast<std::size_t>(c)); }
    int total() const { return total_; }
    const std::vector<int>& counts() const { return counts_; }
    Ratio share(ColorId c) const { return Ratio(count(c), total_); }
    bool contains(ColorId c) const { return count(c) > 0; }
    int support() const;

    friend bool operator==(const Palette&, const Palette&) = default;
    friend auto operator<=>(const Palette& a, const Palette& b) { return a.counts_ <=> b.counts_; }

    std::string str() const;

private:
    std::vector<int> counts_;
    int total_ = 0;
};

struct PaletteHash {
    std::size_t operator()(const Palette& p) const noexcept;
};

/// Backend of a weak order over palettes. Every weak order used here is
/// expressed through an integer level: higher level means more preferred,
/// equal levels are indifferent.
class Ranker {
public:
    virtual ~Ranker() = default;
    virtual int rank(const Palette& p) const = 0;
    virtual std::string family() const = 0;
    virtual Json params() const = 0;
    virtual int gamma() const = 0;
    /// Whether, restricted to palettes containing color c, the order only
    /// depends on the share of c.
    virtual bool own_color_for(ColorId c) const;
};

class PreferenceOrder {
public:
    using Tiers = std::vector<std::vector<Palette>>;

    /// Tiers are listed best first; unlisted palettes form one bottom tier.
    static PreferenceOrder tier_list(int gamma, Tiers tiers);
    static PreferenceOrder named(const std::string& family, const Json& params, int gamma);
    static PreferenceOrder from_ranker(std::shared_ptr<const Ranker> ranker);

    bool is_tier_list() const;
    const Tiers& tiers() const;
    std::string family() const { return impl_->family(); }
    Json params() const { return impl_->params(); }
    int gamma() const { return impl_->gamma(); }

    int rank(const Palette& p) const;
    Ordering compare(const Palette& p, const Palette& q) const;
    bool own_color_for(ColorId c) const { return impl_->own_color_for(c); }

    /// Structural identity: same family and identical parameters.
    bool same_as(const PreferenceOrder& other) const;

private:
    explicit PreferenceOrder(std::shared_ptr<const Ranker> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Ranker> impl_;
};

struct Budgets {
    int sigma = 0;  // max coalition size
    int rho1 = 0;   // max number of coalitions
    int rho2 = 0;   // max number of non-trivial coalitions

    static Budgets unrestricted(int n) { return {n, n, n}; }
    void validate(int n) const;
    friend bool operator==(const Budgets&, const Budgets&) = default;
};

class Instance {
public:
    Instance(int gamma, std::vector<ColorId> color_of, std::vector<TypeId> type_of,
             std::vector<PreferenceOrder> prefs, std::optional<Budgets> budgets = std::nullopt,
             std::vector<std::string> names = {});

    int n() const { return static_cast<int>(color_of_.size()); }
    int gamma() const { return gamma_; }
    int num_types() const { return static_cast<int>(prefs_.size()); }
    ColorId color_of(AgentId a) const { return color_of_.at(static_cast<std::size_t>(a)); }
    TypeId type_of(AgentId a) const { return type_of_.at(static_cast<std::size_t>(a)); }
    const std::vector<ColorId>& colors() const { return color_of_; }
    const std::vector<TypeId>& types() const { return type_of_; }
    const PreferenceOrder& pref(TypeId t) const { return prefs_.at(static_cast<std::size_t>(t)); }
    const std::vector<PreferenceOrder>& prefs() const { return prefs_; }
    const Budgets& budgets() const { return budgets_; }
    const std::vector<std::string>& names() const { return names_; }
    std::string agent_name(AgentId a) const;

    Instance with_budgets(const Budgets& b) const;

    /// |D_c| for every color.
    const std::vector<int>& class_sizes() const { return class_sizes_; }
    /// n_{c,t}: number of agents with color c and type t.
    int pair_count(ColorId c, TypeId t) const;
    /// Agents with color c and type t, ascending.
    std::vector<AgentId> agents_of(ColorId c, TypeId t) const;

    int rank(AgentId a, const Palette& p) const { return pref(type_of(a)).rank(p); }

private:
    int gamma_;
    std::vector<ColorId> color_of_;
    std::vector<TypeId> type_of_;
    std::vector<PreferenceOrder> prefs_;
    Budgets budgets_;
    std::vector<std::string> names_;
    std::vector<int> class_sizes_;
    std::vector<int> pair_counts_;  // gamma * num_types, row-major by color
};

Palette palette_of(std::span<const AgentId> coalition, const Instance& inst);
Composition composition_of(std::span<const AgentId> coalition, const Instance& inst);
Ordering compare(const Instance& inst, TypeId type, const Palette& p, const Palette& q);

/// Merges types whose preference orders are structurally identical.
Instance merge_identical_types(const Instance& inst);

/// True iff every agent's order depends only on the share of its own color.
bool is_own_color(const Instance& inst);
void require_own_color(const Instance& inst);

/// A palette whose share of color c is r/s. Other mass goes to one other
/// color, which is irrelevant for own-color orders.
Palette own_share_palette(int gamma, ColorId c, int r, int s);

}  // namespace hdg
