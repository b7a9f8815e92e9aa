#include <filesystem>
#include <random>

#include "doctest.h"
#include "hdg/io.hpp"
#include "hdg/random_instances.hpp"
#include "test_support.hpp"

using namespace hdg;

TEST_CASE("fixture encodes the example") {
    const Instance inst = test::example1();
    CHECK(inst.names() == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(inst.pref(0).tiers().size() == 5);
    CHECK(inst.pref(1).tiers().size() == 4);
    CHECK(inst.budgets() == Budgets::unrestricted(4));
}

TEST_CASE("instances and outcomes round-trip bit-exactly") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const Instance inst = random_instance(rng);
        const std::string text = serialize_instance(inst);
        const Instance back = parse_instance(text);
        CHECK(serialize_instance(back) == text);
        CHECK(back.budgets() == inst.budgets());
        CHECK(back.colors() == inst.colors());
        CHECK(back.types() == inst.types());
        for (TypeId t = 0; t < inst.num_types(); ++t) CHECK(back.pref(t).same_as(inst.pref(t)));
    }
    const Outcome o({{3, 1}, {0}, {2}}, 4);
    CHECK(parse_outcome(serialize_outcome(o), 4) == o);
    CHECK(serialize_outcome(o) == "[[3,1],[0],[2]]\n");
    CHECK(parse_outcome(R"({"coalitions": [[0,1]]})", 2) == Outcome({{0, 1}}, 2));
}

TEST_CASE("missing budgets default to unrestricted") {
    const Instance inst = parse_instance(R"({"n": 2, "gamma": 1, "agents": [{"id": 1, "color": 0, "type": 0},
        {"id": 0, "color": 0, "type": 0}], "types": [{"tiers": []}]})");
    CHECK(inst.budgets() == Budgets::unrestricted(2));
    CHECK(inst.names().empty());
}

TEST_CASE("malformed files raise parse errors") {
    CHECK_THROWS_AS(parse_instance("{"), ParseError);
    CHECK_THROWS_AS(parse_instance("[]"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 2, "gamma": 1, "agents": [], "types": []})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 1, "gamma": 1, "agents": [{"id": 0, "color": 0}], "types": []})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": 1, "gamma": 1, "agents": [{"id": 0, "color": 0, "type": 0}], "types": [{}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n": "2", "gamma": 1, "agents": [], "types": []})"), ParseError);
    // Well-formed JSON that breaks instance invariants keeps its own error type.
    CHECK_THROWS_AS(parse_instance(R"({"n": 1, "gamma": 1, "agents": [{"id": 0, "color": 3, "type": 0}],
        "types": [{"tiers": []}]})"), InvalidInput);
    CHECK_THROWS_AS(parse_outcome("[[0], 1]", 2), ParseError);
    CHECK_THROWS_AS(parse_outcome("[[0]]", 2), InvalidOutcome);
    CHECK_THROWS_AS(read_instance_file("/nonexistent/instance.json"), ParseError);
}

TEST_CASE("source problem files") {
    CHECK(x3c_from_json(Json::parse(R"({"universe": 3, "sets": [[0, 1, 2]]})")).sets.size() == 1);
    CHECK(partition_from_json(Json::parse(R"({"numbers": [1, 1]})")) == std::vector<int>{1, 1});
    CHECK(mss_from_json(Json::parse(R"({"sets": [[[1]]], "target": [1]})")).target == std::vector<int>{1});
    const IndSetInput g = indset_from_json(Json::parse(R"({"vertices": 3, "edges": [[0, 1]], "k": 2})"));
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});
    const SGaspInstance s = sgasp_from_json(Json::parse(R"({"participants": 1, "activities": 1, "approved": [[[0, 1]]]})"));
    CHECK(s.approved[0] == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK_THROWS_AS(x3c_from_json(Json::parse(R"({"universe": 3, "sets": [[0, 1]]})")), ParseError);
}
