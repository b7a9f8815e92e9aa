#include "hdg/io.hpp"

#include <fstream>
#include <sstream>

namespace hdg {

namespace {

// nlohmann throws its own exception types; rethrow them as ParseError so
// callers can rely on one error family for malformed files.
template <class F>
auto parsing(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
    }
}

int require_int(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    if (!j.at(key).is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return j.at(key).get<int>();
}

}  // namespace

Json instance_to_json(const Instance& inst) {
    Json agents = Json::array();
    for (AgentId a = 0; a < inst.n(); ++a) {
        Json rec{{"id", a}, {"color", inst.color_of(a)}, {"type", inst.type_of(a)}};
        if (!inst.names().empty()) rec["name"] = inst.names()[static_cast<std::size_t>(a)];
        agents.push_back(std::move(rec));
    }
    Json types = Json::array();
    for (const auto& pref : inst.prefs()) {
        if (pref.is_tier_list()) {
            types.push_back(Json{{"tiers", pref.params()}});
        } else {
            types.push_back(Json{{"family", pref.family()}, {"params", pref.params()}});
        }
    }
    const Budgets& b = inst.budgets();
    return Json{{"n", inst.n()},       {"gamma", inst.gamma()}, {"sigma", b.sigma}, {"rho1", b.rho1},
                {"rho2", b.rho2},      {"agents", agents},      {"types", types}};
}

Instance instance_from_json(const Json& j) {
    return parsing("instance", [&] {
        if (!j.is_object()) throw ParseError("instance must be a JSON object");
        const int n = require_int(j, "n");
        const int gamma = require_int(j, "gamma");
        if (n < 1) throw ParseError("instance needs at least one agent");
        const Json& agents = j.at("agents");
        if (!agents.is_array() || static_cast<int>(agents.size()) != n) throw ParseError("agents must list exactly n records");
        std::vector<ColorId> colors(static_cast<std::size_t>(n));
        std::vector<TypeId> types(static_cast<std::size_t>(n));
        std::vector<std::string> names;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        bool any_name = false;
        for (const auto& rec : agents) any_name = any_name || rec.contains("name");
        if (any_name) names.resize(static_cast<std::size_t>(n));
        for (const auto& rec : agents) {
            const int id = require_int(rec, "id");
            if (id < 0 || id >= n || seen[static_cast<std::size_t>(id)]) throw ParseError("agent ids must be 0..n-1 without repeats");
            seen[static_cast<std::size_t>(id)] = true;
            colors[static_cast<std::size_t>(id)] = require_int(rec, "color");
            types[static_cast<std::size_t>(id)] = require_int(rec, "type");
            if (any_name) {
                names[static_cast<std::size_t>(id)] = rec.contains("name") ? rec.at("name").get<std::string>() : std::to_string(id);
            }
        }
        std::vector<PreferenceOrder> prefs;
        for (const auto& block : j.at("types")) {
            if (block.contains("tiers")) {
                prefs.push_back(PreferenceOrder::named("tiers", block.at("tiers"), gamma));
            } else if (block.contains("family")) {
                prefs.push_back(PreferenceOrder::named(block.at("family").get<std::string>(),
                                                       block.value("params", Json::object()), gamma));
            } else {
                throw ParseError("type block needs 'tiers' or 'family'");
            }
        }
        Budgets b = Budgets::unrestricted(n);
        if (j.contains("sigma")) b.sigma = require_int(j, "sigma");
        if (j.contains("rho1")) b.rho1 = require_int(j, "rho1");
        if (j.contains("rho2")) b.rho2 = require_int(j, "rho2");
        return Instance(gamma, std::move(colors), std::move(types), std::move(prefs), b, std::move(names));
    });
}

Json outcome_to_json(const Outcome& outcome) {
    Json out = Json::array();
    for (const auto& c : outcome.coalitions()) out.push_back(c);
    return out;
}

Outcome outcome_from_json(const Json& j, int n) {
    return parsing("outcome", [&] {
        const Json& list = j.is_object() ? j.at("coalitions") : j;
        if (!list.is_array()) throw ParseError("outcome must be a list of agent-id lists");
        std::vector<std::vector<AgentId>> cs;
        for (const auto& c : list) cs.push_back(c.get<std::vector<AgentId>>());
        return Outcome(std::move(cs), n);
    });
}

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(1) + "\n"; }

Instance parse_instance(const std::string& text) {
    return instance_from_json(parsing("instance", [&] { return Json::parse(text); }));
}

std::string serialize_outcome(const Outcome& outcome) { return outcome_to_json(outcome).dump() + "\n"; }

Outcome parse_outcome(const std::string& text, int n) {
    return outcome_from_json(parsing("outcome", [&] { return Json::parse(text); }), n);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << text;
}

Json read_json_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    return parsing(path.string().c_str(), [&] { return Json::parse(text); });
}

Instance read_instance_file(const std::filesystem::path& path) { return instance_from_json(read_json_file(path)); }

X3CInput x3c_from_json(const Json& j) {
    return parsing("X3C input", [&] {
        X3CInput in;
        in.universe = require_int(j, "universe");
        for (const auto& s : j.at("sets")) in.sets.push_back(s.get<std::array<int, 3>>());
        return in;
    });
}

std::vector<int> partition_from_json(const Json& j) {
    return parsing("partition input", [&] { return j.at("numbers").get<std::vector<int>>(); });
}

MssInput mss_from_json(const Json& j) {
    return parsing("MSS input", [&] {
        return MssInput{j.at("sets").get<std::vector<std::vector<std::vector<int>>>>(), j.at("target").get<std::vector<int>>()};
    });
}

IndSetInput indset_from_json(const Json& j) {
    return parsing("independent set input", [&] {
        IndSetInput in;
        in.vertices = require_int(j, "vertices");
        in.k = require_int(j, "k");
        for (const auto& e : j.at("edges")) {
            const auto uv = e.get<std::array<int, 2>>();
            in.edges.emplace_back(uv[0], uv[1]);
        }
        return in;
    });
}

SGaspInstance sgasp_from_json(const Json& j) {
    return parsing("sGASP input", [&] {
        SGaspInstance in;
        in.participants = require_int(j, "participants");
        in.activities = require_int(j, "activities");
        for (const auto& list : j.at("approved")) {
            std::vector<std::pair<int, int>> pairs;
            for (const auto& at : list) {
                const auto v = at.get<std::array<int, 2>>();
                pairs.emplace_back(v[0], v[1]);
            }
            in.approved.push_back(std::move(pairs));
        }
        if (j.contains("s")) in.s = require_int(j, "s");
        return in;
    });
}

}  // namespace hdg
