#include "hdg/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hdg/maxflow.hpp"

namespace hdg {

bool Reduction::greens_satisfied(const Outcome& outcome) const {
    for (AgentId g : greens) {
        if (!desirable->contains(palette_of(outcome.coalition(outcome.member_of(g)), instance))) return false;
    }
    return true;
}

namespace {

// Appends the red, blue and green agents of a trap gadget with the given
// colors and returns the three type ids (red, blue, green).
struct GadgetBuilder {
    std::vector<ColorId>& colors;
    std::vector<TypeId>& types;
    std::vector<PreferenceOrder>& prefs;
    std::vector<std::string>& names;

    void add(int gamma, ColorId red, ColorId blue, ColorId green, int m, const Json& desirable, Reduction& out) {
        Json base{{"red", red}, {"blue", blue}, {"green", green}, {"m", m}, {"desirable", desirable}};
        const TypeId first = static_cast<TypeId>(prefs.size());
        for (const char* role : {"red", "blue", "green"}) {
            Json p = base;
            p["role"] = role;
            prefs.push_back(PreferenceOrder::named("trap-gadget", p, gamma));
        }
        out.red = static_cast<AgentId>(colors.size());
        colors.push_back(red);
        types.push_back(first);
        names.push_back("R");
        out.blue = static_cast<AgentId>(colors.size());
        colors.push_back(blue);
        types.push_back(first + 1);
        names.push_back("B");
        for (int i = 0; i < m; ++i) {
            out.greens.push_back(static_cast<AgentId>(colors.size()));
            colors.push_back(green);
            types.push_back(first + 2);
            names.push_back("G" + std::to_string(i));
        }
        out.desirable = make_palette_set(desirable, gamma);
    }
};

Reduction finish(Reduction r, int gamma, std::vector<ColorId> colors, std::vector<TypeId> types,
                 std::vector<PreferenceOrder> prefs, std::vector<std::string> names, Budgets (*budgets)(int n)) {
    const int n = static_cast<int>(colors.size());
    r.instance = Instance(gamma, std::move(colors), std::move(types), std::move(prefs), budgets(n), std::move(names));
    return r;
}

// Coalitions of the outcome holding at least one green agent, in order.
std::vector<int> green_coalitions(const Reduction& red, const Outcome& outcome) {
    std::vector<int> idx;
    for (AgentId g : red.greens) {
        const int c = outcome.member_of(g);
        if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
    }
    return idx;
}

Reduction placeholder() {
    static const Instance dummy(1, {0}, {0}, {PreferenceOrder::tier_list(1, {})});
    return Reduction{dummy, {}, std::nullopt, std::nullopt, nullptr};
}

}  // namespace

// ---- X3C ----------------------------------------------------------------

namespace {

void validate_x3c(const X3CInput& in) {
    if (in.universe <= 0 || in.universe % 3 != 0) throw InvalidInput("X3C universe size must be a positive multiple of 3");
    std::set<std::array<int, 3>> seen;
    for (auto s : in.sets) {
        for (int u : s) {
            if (u < 0 || u >= in.universe) throw InvalidInput("X3C set element out of range");
        }
        std::sort(s.begin(), s.end());
        if (s[0] == s[1] || s[1] == s[2]) throw InvalidInput("X3C sets need three distinct elements");
        if (!seen.insert(s).second) throw InvalidInput("X3C family lists the same set twice");
    }
}

}  // namespace

Reduction from_x3c(const X3CInput& in) {
    validate_x3c(in);
    const int u = in.universe;
    const ColorId red = u, blue = u + 1, green = u + 2;
    const int gamma = u + 3;
    Json palettes = Json::array();
    for (const auto& s : in.sets) {
        std::vector<int> counts(static_cast<std::size_t>(gamma), 0);
        for (int e : s) counts[static_cast<std::size_t>(e)] = 1;
        counts[static_cast<std::size_t>(green)] = 1;
        palettes.push_back(counts);
    }
    const Json desirable{{"kind", "explicit"}, {"palettes", palettes}};

    std::vector<ColorId> colors;
    std::vector<TypeId> types;
    std::vector<PreferenceOrder> prefs{PreferenceOrder::named("approved-set", Json{{"approved", desirable}}, gamma)};
    std::vector<std::string> names;
    for (int e = 0; e < u; ++e) {
        colors.push_back(e);
        types.push_back(0);
        names.push_back("u" + std::to_string(e));
    }
    Reduction r = placeholder();
    GadgetBuilder{colors, types, prefs, names}.add(gamma, red, blue, green, u / 3, desirable, r);
    return finish(std::move(r), gamma, std::move(colors), std::move(types), std::move(prefs), std::move(names),
                  [](int n) { return Budgets{std::min(4, n), n, n}; });
}

bool is_exact_cover(const X3CInput& in, const std::vector<int>& chosen) {
    std::vector<int> hit(static_cast<std::size_t>(in.universe), 0);
    for (int i : chosen) {
        if (i < 0 || i >= static_cast<int>(in.sets.size())) return false;
        for (int e : in.sets[static_cast<std::size_t>(i)]) ++hit[static_cast<std::size_t>(e)];
    }
    return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

std::optional<std::vector<int>> x3c_decide(const X3CInput& in) {
    validate_x3c(in);
    const std::size_t m = in.sets.size();
    if (m > 24) throw InstanceTooLarge("X3C decider is capped at 24 sets");
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> chosen;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) chosen.push_back(static_cast<int>(i));
        }
        if (is_exact_cover(in, chosen)) return chosen;
    }
    return std::nullopt;
}

std::vector<int> decode_x3c(const X3CInput& in, const Reduction& red, const Outcome& outcome) {
    std::vector<int> chosen;
    for (int c : green_coalitions(red, outcome)) {
        std::array<int, 3> elems{};
        int k = 0;
        for (AgentId a : outcome.coalition(c)) {
            const ColorId col = red.instance.color_of(a);
            if (col < in.universe) {
                if (k == 3) throw InvalidOutcome("green coalition holds more than three universe agents");
                elems[static_cast<std::size_t>(k++)] = col;
            }
        }
        if (k != 3) throw InvalidOutcome("green coalition does not hold a 3-set");
        std::sort(elems.begin(), elems.end());
        bool found = false;
        for (std::size_t i = 0; i < in.sets.size() && !found; ++i) {
            auto s = in.sets[i];
            std::sort(s.begin(), s.end());
            if (s == elems) {
                chosen.push_back(static_cast<int>(i));
                found = true;
            }
        }
        if (!found) throw InvalidOutcome("green coalition is not a set of the family");
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// ---- Partition --------------------------------------------------------------

Reduction from_partition(const std::vector<int>& numbers, Notion /*notion*/) {
    if (numbers.empty()) throw InvalidInput("partition needs at least one number");
    long long total = 0;
    for (int x : numbers) {
        if (x <= 0) throw InvalidInput("partition numbers must be positive");
        total += x;
    }
    if (total % 2 != 0) throw InvalidInput("partition numbers must have an even sum");
    std::vector<int> values(numbers);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const int v = static_cast<int>(values.size());
    const ColorId red = v, blue = v + 1, green = v + 2;
    const int gamma = v + 3;

    std::vector<int> weights(static_cast<std::size_t>(gamma), 0);
    for (int i = 0; i < v; ++i) weights[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(i)];
    weights[static_cast<std::size_t>(red)] = -1;
    weights[static_cast<std::size_t>(blue)] = -1;
    const Json desirable{{"kind", "linear-count"}, {"anchor", green}, {"weights", weights}, {"target", total / 2}};

    std::vector<ColorId> colors;
    std::vector<TypeId> types;
    std::vector<PreferenceOrder> prefs{PreferenceOrder::named("approved-set", Json{{"approved", desirable}}, gamma)};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < numbers.size(); ++i) {
        const auto it = std::lower_bound(values.begin(), values.end(), numbers[i]);
        colors.push_back(static_cast<ColorId>(it - values.begin()));
        types.push_back(0);
        names.push_back("a" + std::to_string(i) + "=" + std::to_string(numbers[i]));
    }
    Reduction r = placeholder();
    GadgetBuilder{colors, types, prefs, names}.add(gamma, red, blue, green, 2, desirable, r);
    return finish(std::move(r), gamma, std::move(colors), std::move(types), std::move(prefs), std::move(names),
                  [](int n) { return Budgets{n, 3, 3}; });
}

std::optional<std::vector<int>> partition_decide(const std::vector<int>& numbers) {
    const std::size_t m = numbers.size();
    if (m > 24) throw InstanceTooLarge("partition decider is capped at 24 numbers");
    const long long total = std::accumulate(numbers.begin(), numbers.end(), 0LL);
    if (total % 2 != 0) return std::nullopt;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        long long sum = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) sum += numbers[i];
        }
        if (2 * sum != total) continue;
        std::vector<int> half;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) half.push_back(static_cast<int>(i));
        }
        return half;
    }
    return std::nullopt;
}

std::vector<int> decode_partition(const std::vector<int>& numbers, const Reduction& red, const Outcome& outcome) {
    const auto gcs = green_coalitions(red, outcome);
    if (gcs.empty()) throw InvalidOutcome("no coalition holds a green agent");
    // Normal agents are 0..numbers.size()-1.
    auto normals_in = [&](int c) {
        std::vector<int> out;
        for (AgentId a : outcome.coalition(c)) {
            if (a < static_cast<int>(numbers.size())) out.push_back(a);
        }
        return out;
    };
    std::vector<int> half;
    if (gcs.size() >= 2) {
        half = normals_in(gcs[0]);
    } else {
        // Both greens share a coalition: every number occurs an even number
        // of times there, so taking every second agent of each value works.
        std::map<int, int> seen;
        for (int a : normals_in(gcs[0])) {
            if (seen[numbers[static_cast<std::size_t>(a)]]++ % 2 == 0) half.push_back(a);
        }
    }
    std::sort(half.begin(), half.end());
    return half;
}

// ---- MSS ----------------------------------------------------------------------

namespace {

void validate_mss(const MssInput& in) {
    if (in.sets.empty()) throw InvalidInput("MSS needs at least one group");
    const std::size_t k = in.target.size();
    for (int x : in.target) {
        if (x < 0) throw InvalidInput("MSS target entries must be non-negative");
    }
    for (const auto& group : in.sets) {
        for (const auto& vec : group) {
            if (vec.size() != k) throw InvalidInput("MSS vector dimension does not match the target");
            for (int x : vec) {
                if (x < 0) throw InvalidInput("MSS vector entries must be non-negative");
            }
        }
    }
}

}  // namespace

Reduction from_mss(const MssInput& in) {
    validate_mss(in);
    const int omega = static_cast<int>(in.sets.size());
    const int k = static_cast<int>(in.target.size());
    const int gamma = omega + k;
    std::vector<ColorId> colors;
    std::vector<TypeId> types;
    std::vector<PreferenceOrder> prefs;
    std::vector<std::string> names;
    std::vector<int> markers;
    for (int i = 0; i < omega; ++i) {
        Json palettes = Json::array();
        for (const auto& vec : in.sets[static_cast<std::size_t>(i)]) {
            std::vector<int> counts(static_cast<std::size_t>(gamma), 0);
            counts[static_cast<std::size_t>(i)] = 1;
            for (int j = 0; j < k; ++j) counts[static_cast<std::size_t>(omega + j)] = vec[static_cast<std::size_t>(j)];
            palettes.push_back(counts);
        }
        prefs.push_back(PreferenceOrder::named(
            "approved-set", Json{{"approved", Json{{"kind", "explicit"}, {"palettes", palettes}}}}, gamma));
        colors.push_back(i);
        types.push_back(i);
        names.push_back("m" + std::to_string(i));
        markers.push_back(i);
    }
    prefs.push_back(PreferenceOrder::named("marker-count", Json{{"markers", markers}}, gamma));
    for (int j = 0; j < k; ++j) {
        for (int r = 0; r < in.target[static_cast<std::size_t>(j)]; ++r) {
            colors.push_back(omega + j);
            types.push_back(omega);
            names.push_back("g" + std::to_string(j) + "_" + std::to_string(r));
        }
    }
    const int n = static_cast<int>(colors.size());
    Reduction r = placeholder();
    r.instance = Instance(gamma, std::move(colors), std::move(types), std::move(prefs), Budgets{n, omega, omega},
                          std::move(names));
    return r;
}

std::optional<std::vector<int>> mss_decide(const MssInput& in) {
    validate_mss(in);
    const std::size_t omega = in.sets.size();
    std::vector<int> choice(omega, -1);
    std::vector<int> sum(in.target.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == omega) return sum == in.target;
        for (int c = -1; c < static_cast<int>(in.sets[i].size()); ++c) {
            choice[i] = c;
            if (c >= 0) {
                for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += in.sets[i][static_cast<std::size_t>(c)][j];
            }
            const bool ok = self(self, i + 1);
            if (c >= 0) {
                for (std::size_t j = 0; j < sum.size(); ++j) sum[j] -= in.sets[i][static_cast<std::size_t>(c)][j];
            }
            if (ok) return true;
        }
        choice[i] = -1;
        return false;
    };
    if (rec(rec, 0)) return choice;
    return std::nullopt;
}

std::vector<int> decode_mss(const MssInput& in, const Reduction& red, const Outcome& outcome) {
    const int omega = static_cast<int>(in.sets.size());
    const int k = static_cast<int>(in.target.size());
    std::vector<int> choice(static_cast<std::size_t>(omega), -1);
    for (int i = 0; i < omega; ++i) {
        const auto& coal = outcome.coalition(outcome.member_of(i));
        if (coal.size() == 1) continue;
        std::vector<int> vec(static_cast<std::size_t>(k), 0);
        for (AgentId a : coal) {
            const ColorId c = red.instance.color_of(a);
            if (c < omega && c != i) throw InvalidOutcome("two markers share a coalition");
            if (c >= omega) ++vec[static_cast<std::size_t>(c - omega)];
        }
        const auto& group = in.sets[static_cast<std::size_t>(i)];
        const auto it = std::find(group.begin(), group.end(), vec);
        if (it == group.end()) throw InvalidOutcome("marker coalition matches no vector of its group");
        choice[static_cast<std::size_t>(i)] = static_cast<int>(it - group.begin());
    }
    return choice;
}

// ---- Independent set ------------------------------------------------------------

namespace {

void validate_indset(const IndSetInput& in) {
    if (in.vertices < 1) throw InvalidInput("graph needs at least one vertex");
    if (in.k < 1 || in.k > in.vertices) throw InvalidInput("k must lie in [1, |V|]");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : in.edges) {
        if (u < 0 || v < 0 || u >= in.vertices || v >= in.vertices) throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("graph must not have loops");
        if (!seen.insert(std::minmax(u, v)).second) throw InvalidInput("graph must not have parallel edges");
    }
}

}  // namespace

Reduction from_independent_set(const IndSetInput& in) {
    validate_indset(in);
    const int nv = in.vertices;
    const ColorId red = nv, blue = nv + 1, green = nv + 2;
    const int gamma = nv + 3;
    std::vector<int> vertex_colors(static_cast<std::size_t>(nv));
    std::iota(vertex_colors.begin(), vertex_colors.end(), 0);
    Json edges = Json::array();
    for (auto [u, v] : in.edges) edges.push_back(Json::array({u, v}));
    const Json independent{{"kind", "independent-set"}, {"guard", green}, {"vertices", vertex_colors}, {"edges", edges}, {"k", in.k}};
    const Json any_k{{"kind", "independent-set"}, {"guard", green}, {"vertices", vertex_colors}, {"edges", Json::array()}, {"k", in.k}};

    std::vector<ColorId> colors;
    std::vector<TypeId> types;
    std::vector<PreferenceOrder> prefs{PreferenceOrder::named("approved-set", Json{{"approved", independent}}, gamma)};
    std::vector<std::string> names;
    for (int v = 0; v < nv; ++v) {
        colors.push_back(v);
        types.push_back(0);
        names.push_back("v" + std::to_string(v));
    }
    Reduction r = placeholder();
    GadgetBuilder{colors, types, prefs, names}.add(gamma, red, blue, green, 1, any_k, r);
    const int k = in.k;
    const int n = static_cast<int>(colors.size());
    r.instance = Instance(gamma, std::move(colors), std::move(types), std::move(prefs), Budgets{k + 1, n, 2},
                          std::move(names));
    return r;
}

std::optional<std::vector<int>> indset_decide(const IndSetInput& in) {
    validate_indset(in);
    if (in.vertices > 24) throw InstanceTooLarge("independent set decider is capped at 24 vertices");
    for (std::size_t mask = 0; mask < (std::size_t{1} << in.vertices); ++mask) {
        if (std::popcount(mask) != in.k) continue;
        const bool independent = std::none_of(in.edges.begin(), in.edges.end(), [&](const auto& e) {
            return (mask >> e.first & 1) && (mask >> e.second & 1);
        });
        if (!independent) continue;
        std::vector<int> set;
        for (int v = 0; v < in.vertices; ++v) {
            if (mask >> v & 1) set.push_back(v);
        }
        return set;
    }
    return std::nullopt;
}

std::vector<int> decode_independent_set(const IndSetInput& in, const Reduction& red, const Outcome& outcome) {
    std::vector<int> set;
    for (AgentId a : outcome.coalition(outcome.member_of(red.greens.at(0)))) {
        if (red.instance.color_of(a) < in.vertices) set.push_back(red.instance.color_of(a));
    }
    std::sort(set.begin(), set.end());
    return set;
}

// ---- sGASP ------------------------------------------------------------------------

void SGaspInstance::validate() const {
    if (participants < 0 || activities < 1) throw InvalidInput("sGASP needs at least one activity");
    if (static_cast<int>(approved.size()) != participants) throw InvalidInput("one approval list per participant required");
    for (const auto& list : approved) {
        for (auto [a, t] : list) {
            if (a < 0 || a >= activities) throw InvalidInput("approved activity out of range");
            if (t < 1 || t > participants) throw InvalidInput("approved group size out of range");
        }
    }
}

SGaspLayout SGaspLayout::of(int activities, int s) {
    SGaspLayout l;
    l.s = s;
    const long long a = activities;
    for (int i = 1; i <= activities; ++i) {
        l.z.push_back(100 * i + 1);
        l.r_cap.push_back(75 * i + 1);
    }
    l.t_lo = 2 * s * activities + 1;
    l.t_hi = 2 * s * (activities + 1) - 1;
    l.spoilers = (400 * a * a) * (200 * a * a) + 1;
    return l;
}

SGaspInstance gasp_normalize(const SGaspInstance& in) {
    in.validate();
    const int na = in.activities;
    const int s = in.participants + 1;
    const int lo = 2 * s * na + 1;
    SGaspInstance out;
    out.activities = na;
    out.s = s;
    for (int a = 0; a < na; ++a) {
        std::vector<std::pair<int, int>> sizes;
        for (int t = lo; t <= lo + 2 * s - 2; t += 2) sizes.emplace_back(a, t);
        for (int k = 0; k < lo; ++k) out.approved.push_back(sizes);
    }
    for (const auto& list : in.approved) {
        std::vector<std::pair<int, int>> sizes;
        for (auto [a, t] : list) sizes.emplace_back(a, 2 * t + lo);
        out.approved.push_back(sizes);
        out.approved.push_back(sizes);
    }
    out.participants = static_cast<int>(out.approved.size());
    return out;
}

bool is_gasp_solution(const SGaspInstance& in, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != in.participants) return false;
    std::vector<int> size(static_cast<std::size_t>(in.activities), 0);
    for (int a : assignment) {
        if (a < 0 || a >= in.activities) return false;
        ++size[static_cast<std::size_t>(a)];
    }
    for (int p = 0; p < in.participants; ++p) {
        const int a = assignment[static_cast<std::size_t>(p)];
        const auto& list = in.approved[static_cast<std::size_t>(p)];
        if (std::find(list.begin(), list.end(), std::pair{a, size[static_cast<std::size_t>(a)]}) == list.end()) return false;
    }
    return true;
}

std::optional<std::vector<int>> sgasp_decide(const SGaspInstance& in) {
    in.validate();
    const int np = in.participants;
    const int na = in.activities;
    std::vector<int> sizes(static_cast<std::size_t>(na), 0);
    std::optional<std::vector<int>> found;
    auto rec = [&](auto&& self, int a, int left) -> bool {
        if (a == na - 1) {
            sizes[static_cast<std::size_t>(a)] = left;
            FlowNetwork net;
            net.num_left = np;
            net.right_capacity = sizes;
            for (int p = 0; p < np; ++p) {
                std::vector<int> adj;
                for (auto [act, t] : in.approved[static_cast<std::size_t>(p)]) {
                    if (sizes[static_cast<std::size_t>(act)] == t && std::find(adj.begin(), adj.end(), act) == adj.end()) adj.push_back(act);
                }
                net.edges.push_back(std::move(adj));
            }
            const FlowResult f = max_flow(net);
            if (f.value != np) return false;
            found = f.assignment;
            return true;
        }
        for (int k = 0; k <= left; ++k) {
            sizes[static_cast<std::size_t>(a)] = k;
            if (self(self, a + 1, left - k)) return true;
        }
        return false;
    };
    rec(rec, 0, np);
    return found;
}

Instance from_sgasp(const SGaspInstance& input, bool normalized) {
    const SGaspInstance in = normalized ? input : gasp_normalize(input);
    in.validate();
    if (!in.s) throw InvalidInput("normalized sGASP instance must carry s");
    const SGaspLayout layout = SGaspLayout::of(in.activities, *in.s);
    for (const auto& list : in.approved) {
        for (auto [a, t] : list) {
            if (t % 2 == 0 || t < layout.t_lo || t > layout.t_hi) {
                throw InvalidInput("sGASP instance is not normalized: size " + std::to_string(t) + " out of range");
            }
        }
    }
    constexpr ColorId kRed = 0;
    constexpr ColorId kBlue = 1;
    const int gamma = 2;
    auto ratio = [&](int red, int blue) { return Palette::from_counts(std::vector<int>{red, blue}); };

    std::vector<PreferenceOrder> prefs;
    std::map<std::vector<std::pair<int, int>>, TypeId> normal_type;
    std::vector<ColorId> colors;
    std::vector<TypeId> types;
    for (const auto& list : in.approved) {
        auto key = list;
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        auto [it, fresh] = normal_type.try_emplace(key, static_cast<TypeId>(prefs.size()));
        if (fresh) {
            std::vector<Palette> top;
            for (auto [a, t] : key) top.push_back(ratio(layout.z[static_cast<std::size_t>(a)], t));
            std::sort(top.begin(), top.end());
            top.erase(std::unique(top.begin(), top.end()), top.end());
            prefs.push_back(PreferenceOrder::tier_list(gamma, {top, {Palette::unit(gamma, kBlue)}}));
        }
        colors.push_back(kBlue);
        types.push_back(it->second);
    }
    for (int a = 0; a < in.activities; ++a) {
        std::vector<Palette> top;
        for (int t = layout.t_lo; t <= layout.t_hi; t += 2) top.push_back(ratio(layout.z[static_cast<std::size_t>(a)], t));
        const TypeId type = static_cast<TypeId>(prefs.size());
        prefs.push_back(PreferenceOrder::tier_list(gamma, {top, {Palette::unit(gamma, kRed)}}));
        colors.insert(colors.end(), static_cast<std::size_t>(layout.z[static_cast<std::size_t>(a)]), kRed);
        types.insert(types.end(), static_cast<std::size_t>(layout.z[static_cast<std::size_t>(a)]), type);
    }
    const TypeId spoiler = static_cast<TypeId>(prefs.size());
    prefs.push_back(PreferenceOrder::named("spoiler",
                                           Json{{"red", kRed},
                                                {"blue", kBlue},
                                                {"z", layout.z},
                                                {"r_cap", layout.r_cap},
                                                {"t_lo", layout.t_lo},
                                                {"t_hi", layout.t_hi}},
                                           gamma));
    colors.insert(colors.end(), static_cast<std::size_t>(layout.spoilers), kRed);
    types.insert(types.end(), static_cast<std::size_t>(layout.spoilers), spoiler);
    return Instance(gamma, std::move(colors), std::move(types), std::move(prefs));
}

}  // namespace hdg
