#pragma once

// Command implementations behind the `hdg` executable. They take parsed
// options and write to the given streams so tests can drive them directly.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hdg/limits.hpp"
#include "hdg/random_instances.hpp"
#include "hdg/stability.hpp"

namespace hdg {

enum class Algo { Auto, Brute, BrutePositions, ColorsSize, ColorsTypes, ColorsNtcoal, ColorsTotcoal, OwnNash };

const char* to_string(Algo a);
Algo parse_algo(const std::string& s);

/// The solver `auto` picks: brute force on tiny instances, then the
/// parameterizations that stay tractable for the instance at hand.
Algo choose_algorithm(const Instance& inst);

struct SolveResult {
    Algo algo = Algo::Auto;  // the solver that actually ran
    std::optional<Outcome> outcome;
};

SolveResult solve(const Instance& inst, Notion notion, Algo algo, const SearchLimits& limits = SearchLimits::from_env());

/// Exit codes shared by all commands.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

struct SolveOptions {
    std::string instance_path;
    Algo algo = Algo::Auto;
    Notion notion = Notion::NS;
    std::optional<int> sigma, rho1, rho2;
    std::string out_path;  // empty: print the outcome only
};
int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);

struct CheckOptions {
    std::string instance_path;
    std::string outcome_path;
    Notion notion = Notion::NS;
};
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::uint64_t seed = 1;
    int count = 200;
    RandomCaps caps;
    std::string triage_dir = ".";  // offending instances are written here
};

struct BenchReport {
    int instances = 0;
    int own_color = 0;
    int solver_runs = 0;
    int disagreements = 0;
    std::string text;  // deterministic for a fixed seed
};

/// Runs every applicable solver on seeded random instances, for both
/// notions, and checks unanimity plus witness validity.
BenchReport run_bench(const BenchOptions& opt, const SearchLimits& limits = SearchLimits::from_env());
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

struct GenOptions {
    std::string kind;  // x3c | partition | mss | indset | sgasp
    std::string source_path;
    Notion notion = Notion::NS;
    bool normalized = false;  // sgasp only: the input already satisfies the size restrictions
    std::string out_path;     // empty: write to `out`
};
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace hdg
