#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "hdg/cli.hpp"
#include "hdg/io.hpp"
#include "test_support.hpp"

using namespace hdg;

namespace {

const std::string kExample = std::string(HDG_FIXTURES) + "/example1.json";

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "hdg_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_outcome(const std::string& name, const std::string& text) {
    const auto path = scratch_dir() / name;
    write_text_file(path, text);
    return path.string();
}

}  // namespace

TEST_CASE("solve prints parameters and writes a checkable outcome") {
    const std::string out_path = (scratch_dir() / "solved.json").string();
    std::ostringstream out, err;
    CHECK(cmd_solve(SolveOptions{kExample, Algo::Auto, Notion::NS, {}, {}, {}, out_path}, out, err) == kExitYes);
    CHECK(out.str().find("gamma=2 tau=2 sigma=4 rho1=4 rho2=4") != std::string::npos);
    CHECK(out.str().find("algorithm=brute") != std::string::npos);
    std::ostringstream out2;
    CHECK(cmd_check(CheckOptions{kExample, out_path, Notion::NS}, out2, err) == kExitYes);
}

TEST_CASE("every algorithm gives the same exit code on the example") {
    for (Algo algo : {Algo::Brute, Algo::BrutePositions, Algo::ColorsSize, Algo::ColorsTypes, Algo::ColorsNtcoal,
                      Algo::ColorsTotcoal, Algo::OwnNash}) {
        std::ostringstream out, err;
        CHECK(cmd_solve(SolveOptions{kExample, algo, Notion::NS, {}, {}, {}, {}}, out, err) == kExitYes);
    }
    std::ostringstream out, err;
    // Four agents never fit into one coalition of size 1.
    CHECK(cmd_solve(SolveOptions{kExample, Algo::ColorsTotcoal, Notion::NS, 1, 1, 0, {}}, out, err) == kExitNo);
    // Budgets that contradict each other are an input error.
    CHECK(cmd_solve(SolveOptions{kExample, Algo::ColorsTotcoal, Notion::NS, {}, 1, 2, {}}, out, err) == kExitError);
    CHECK(err.str().find("rho2") != std::string::npos);
}

TEST_CASE("overrides can make the answer NO") {
    // With sigma = 1 only the singletons remain, and b wants to join c.
    std::ostringstream out, err;
    CHECK(cmd_solve(SolveOptions{kExample, Algo::Auto, Notion::NS, 1, {}, {}, {}}, out, err) == kExitNo);
    CHECK(out.str().find("NO") != std::string::npos);
}

TEST_CASE("check reports the example's deviations and malformed outcomes") {
    std::ostringstream out, err;
    const auto unstable = write_outcome("acd_b.json", "[[0,2,3],[1]]");
    CHECK(cmd_check(CheckOptions{kExample, unstable, Notion::NS}, out, err) == kExitNo);
    CHECK(out.str().find("agent b") != std::string::npos);
    CHECK(cmd_check(CheckOptions{kExample, unstable, Notion::IS}, out, err) == kExitYes);
    const auto stable = write_outcome("bcd_a.json", "[[1,2,3],[0]]");
    CHECK(cmd_check(CheckOptions{kExample, stable, Notion::NS}, out, err) == kExitYes);
    const auto partial = write_outcome("partial.json", "[[0,2,3]]");
    CHECK(cmd_check(CheckOptions{kExample, partial, Notion::NS}, out, err) == kExitError);
    CHECK(err.str().find("InvalidOutcome") != std::string::npos);
}

TEST_CASE("errors map to exit code 2 with distinct messages") {
    std::ostringstream out, err;
    CHECK(cmd_solve(SolveOptions{"/nonexistent.json", Algo::Auto, Notion::NS, {}, {}, {}, {}}, out, err) == kExitError);
    CHECK(err.str().find("ParseError") != std::string::npos);
    const auto mixed = write_outcome("mixed.json", serialize_instance(Instance(
        3, {0, 1, 2}, {0, 0, 0}, {PreferenceOrder::tier_list(3, {{test::pal({1, 1, 0})}})})));
    std::ostringstream err2;
    CHECK(cmd_solve(SolveOptions{mixed, Algo::OwnNash, Notion::NS, {}, {}, {}, {}}, out, err2) == kExitError);
    CHECK(err2.str().find("OwnColorViolation") != std::string::npos);
    ::setenv("HDG_SEARCH_CAP", "2", 1);
    std::ostringstream err3;
    CHECK(cmd_solve(SolveOptions{kExample, Algo::Brute, Notion::NS, {}, {}, {}, {}}, out, err3) == kExitError);
    CHECK(err3.str().find("SearchSpaceTooLarge") != std::string::npos);
    ::unsetenv("HDG_SEARCH_CAP");
    CHECK_THROWS_AS(parse_algo("simplex"), InvalidInput);
}

TEST_CASE("auto dispatch") {
    const Instance small = test::example1();
    CHECK(choose_algorithm(small) == Algo::Brute);
    std::vector<ColorId> colors(10, 0);
    std::vector<TypeId> types(10, 0);
    const Instance big(1, colors, types, {PreferenceOrder::tier_list(1, {})}, Budgets{10, 10, 2});
    CHECK(choose_algorithm(big) == Algo::ColorsNtcoal);
    CHECK(choose_algorithm(big.with_budgets(Budgets{10, 10, 5})) == Algo::ColorsSize);
}

TEST_CASE("bench is deterministic and handles zero instances") {
    BenchOptions opt;
    opt.seed = 12;
    opt.count = 40;
    opt.triage_dir = scratch_dir().string();
    const BenchReport a = run_bench(opt);
    const BenchReport b = run_bench(opt);
    CHECK(a.text == b.text);
    CHECK(a.disagreements == 0);
    CHECK(a.instances == 40);
    opt.count = 0;
    std::ostringstream out, err;
    CHECK(cmd_bench(opt, out, err) == kExitYes);
    CHECK(out.str().find("instances=0") != std::string::npos);
}

TEST_CASE("gen writes instances for every source problem") {
    const std::vector<std::pair<std::string, std::string>> sources{
        {"x3c", R"({"universe": 3, "sets": [[0, 1, 2]]})"},
        {"partition", R"({"numbers": [1, 1]})"},
        {"mss", R"({"sets": [[[1]]], "target": [1]})"},
        {"indset", R"({"vertices": 3, "edges": [[0, 1], [1, 2]], "k": 2})"},
    };
    for (const auto& [kind, text] : sources) {
        const auto src = write_outcome(kind + "_src.json", text);
        std::ostringstream out, err;
        CHECK(cmd_gen(GenOptions{kind, src, Notion::NS, false, {}}, out, err) == kExitYes);
        const Instance inst = parse_instance(out.str());
        CHECK(solve(inst, Notion::NS, Algo::Brute).outcome.has_value());
    }
    std::ostringstream out, err;
    const auto bad = write_outcome("odd.json", R"({"numbers": [1, 2]})");
    CHECK(cmd_gen(GenOptions{"partition", bad, Notion::NS, false, {}}, out, err) == kExitError);
}
