#include <iostream>

#include "CLI11.hpp"
#include "hdg/cli.hpp"

namespace {

CLI::Option* add_notion(CLI::App* app, std::string& notion) {
    return app->add_option("--notion", notion, "ns or is")->check(CLI::IsMember({"ns", "is"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for hedonic diversity games"};
    app.require_subcommand(1);

    hdg::SolveOptions solve_opt;
    std::string solve_algo = "auto", solve_notion = "ns";
    auto* solve = app.add_subcommand("solve", "Decide whether a stable outcome exists and print one");
    solve->add_option("instance", solve_opt.instance_path, "instance file")->required();
    solve->add_option("--algo", solve_algo,
                      "auto|brute|brute-positions|colors-size|colors-types|colors-ntcoal|colors-totcoal|own-nash")
        ->capture_default_str();
    add_notion(solve, solve_notion);
    solve->add_option("--sigma", solve_opt.sigma, "override the coalition size bound");
    solve->add_option("--rho1", solve_opt.rho1, "override the coalition count bound");
    solve->add_option("--rho2", solve_opt.rho2, "override the non-trivial coalition count bound");
    solve->add_option("--out", solve_opt.out_path, "write the outcome here on YES");

    hdg::CheckOptions check_opt;
    std::string check_notion = "ns";
    auto* check = app.add_subcommand("check", "Check an outcome for stability and budget compliance");
    check->add_option("instance", check_opt.instance_path, "instance file")->required();
    check->add_option("outcome", check_opt.outcome_path, "outcome file")->required();
    add_notion(check, check_notion);

    hdg::BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "Cross-check all solvers on seeded random instances");
    bench->add_option("--seed", bench_opt.seed)->capture_default_str();
    bench->add_option("--count", bench_opt.count)->capture_default_str()->check(CLI::NonNegativeNumber);
    bench->add_option("--cap-n", bench_opt.caps.max_n)->capture_default_str()->check(CLI::Range(1, 10));
    bench->add_option("--cap-gamma", bench_opt.caps.max_gamma)->capture_default_str()->check(CLI::Range(1, 5));
    bench->add_option("--cap-tau", bench_opt.caps.max_types)->capture_default_str()->check(CLI::Range(1, 5));
    bench->add_option("--triage-dir", bench_opt.triage_dir, "where disagreeing instances are saved")
        ->capture_default_str();

    hdg::GenOptions gen_opt;
    std::string gen_notion = "ns";
    auto* gen = app.add_subcommand("gen", "Build a reduced instance from a source-problem file");
    gen->add_option("kind", gen_opt.kind, "x3c|partition|mss|indset|sgasp")
        ->required()
        ->check(CLI::IsMember({"x3c", "partition", "mss", "indset", "sgasp"}));
    gen->add_option("source", gen_opt.source_path, "source problem file")->required();
    add_notion(gen, gen_notion);
    gen->add_flag("--normalized", gen_opt.normalized, "sgasp input already satisfies the size restrictions");
    gen->add_option("--out", gen_opt.out_path, "write the instance here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : hdg::kExitError;
    }

    try {
        if (*solve) {
            solve_opt.algo = hdg::parse_algo(solve_algo);
            solve_opt.notion = hdg::parse_notion(solve_notion);
            return hdg::cmd_solve(solve_opt, std::cout, std::cerr);
        }
        if (*check) {
            check_opt.notion = hdg::parse_notion(check_notion);
            return hdg::cmd_check(check_opt, std::cout, std::cerr);
        }
        if (*bench) return hdg::cmd_bench(bench_opt, std::cout, std::cerr);
        gen_opt.notion = hdg::parse_notion(gen_notion);
        return hdg::cmd_gen(gen_opt, std::cout, std::cerr);
    } catch (const hdg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hdg::kExitError;
    }
}
