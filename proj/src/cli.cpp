#include "hdg/cli.hpp"

#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "hdg/brute.hpp"
#include "hdg/colors_ntcoal.hpp"
#include "hdg/colors_size.hpp"
#include "hdg/colors_types.hpp"
#include "hdg/io.hpp"
#include "hdg/ownhdg.hpp"
#include "hdg/reductions.hpp"

namespace hdg {

namespace {

struct AlgoName {
    Algo algo;
    const char* name;
};

constexpr AlgoName kAlgoNames[] = {
    {Algo::Auto, "auto"},
    {Algo::Brute, "brute"},
    {Algo::BrutePositions, "brute-positions"},
    {Algo::ColorsSize, "colors-size"},
    {Algo::ColorsTypes, "colors-types"},
    {Algo::ColorsNtcoal, "colors-ntcoal"},
    {Algo::ColorsTotcoal, "colors-totcoal"},
    {Algo::OwnNash, "own-nash"},
};

// Coalition types of colors-size grow like pairs^sigma.
constexpr double kColorsSizeBudget = 1e6;

}  // namespace

const char* to_string(Algo a) {
    for (const auto& [algo, name] : kAlgoNames) {
        if (algo == a) return name;
    }
    return "?";
}

Algo parse_algo(const std::string& s) {
    for (const auto& [algo, name] : kAlgoNames) {
        if (s == name) return algo;
    }
    throw InvalidInput("unknown algorithm '" + s + "'");
}

Algo choose_algorithm(const Instance& inst) {
    if (inst.n() <= 8) return Algo::Brute;
    if (inst.budgets().rho2 <= 2) return Algo::ColorsNtcoal;
    int pairs = 0;
    for (int c = 0; c < inst.gamma(); ++c) {
        for (int t = 0; t < inst.num_types(); ++t) pairs += inst.pair_count(c, t) > 0;
    }
    double estimate = 1;
    for (int i = 0; i < std::min(inst.budgets().sigma, inst.n()) && estimate <= kColorsSizeBudget; ++i) estimate *= pairs + 1;
    if (estimate <= kColorsSizeBudget) return Algo::ColorsSize;
    return Algo::ColorsTypes;
}

SolveResult solve(const Instance& inst, Notion notion, Algo algo, const SearchLimits& limits) {
    if (algo == Algo::Auto) algo = choose_algorithm(inst);
    SolveResult r{algo, std::nullopt};
    switch (algo) {
        case Algo::Auto: break;
        case Algo::Brute: r.outcome = solve_brute(inst, notion, limits); break;
        case Algo::BrutePositions: r.outcome = solve_brute_positions(inst, notion, limits); break;
        case Algo::ColorsSize: r.outcome = solve_colors_size(inst, notion, limits); break;
        case Algo::ColorsTypes: r.outcome = solve_colors_types(inst, notion, limits); break;
        case Algo::ColorsNtcoal: r.outcome = solve_colors_ntcoal(inst, notion, limits); break;
        case Algo::ColorsTotcoal: r.outcome = solve_colors_totcoal(inst, notion, limits); break;
        case Algo::OwnNash:
            if (notion != Notion::NS) throw InvalidInput("own-nash decides Nash stability only");
            r.outcome = solve_ownhdg_nash(inst, limits);
            break;
    }
    return r;
}

namespace {

// Maps library errors to a message prefix and exit code 2.
int report_error(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const OwnColorViolation& e) {
        err << "OwnColorViolation: " << e.what() << '\n';
    } catch (const SearchSpaceTooLarge& e) {
        err << "SearchSpaceTooLarge: " << e.what() << '\n';
    } catch (const InstanceTooLarge& e) {
        err << "InstanceTooLarge: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "ParseError: " << e.what() << '\n';
    } catch (const InvalidOutcome& e) {
        err << "InvalidOutcome: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitError;
}

std::string parameter_line(const Instance& inst) {
    const Budgets& b = inst.budgets();
    std::ostringstream os;
    os << "n=" << inst.n() << " gamma=" << inst.gamma() << " tau=" << inst.num_types() << " sigma=" << b.sigma
       << " rho1=" << b.rho1 << " rho2=" << b.rho2;
    return os.str();
}

}  // namespace

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    return report_error(err, [&] {
        Instance inst = read_instance_file(opt.instance_path);
        Budgets b = inst.budgets();
        if (opt.sigma) b.sigma = *opt.sigma;
        if (opt.rho1) b.rho1 = *opt.rho1;
        if (opt.rho2) b.rho2 = *opt.rho2;
        inst = inst.with_budgets(b);
        const SolveResult r = solve(inst, opt.notion, opt.algo);
        out << parameter_line(inst) << '\n';
        out << "algorithm=" << to_string(r.algo) << " notion=" << to_string(opt.notion) << '\n';
        if (!r.outcome) {
            out << "NO\n";
            return kExitNo;
        }
        out << "YES " << r.outcome->str(&inst) << '\n';
        if (!opt.out_path.empty()) write_text_file(opt.out_path, serialize_outcome(*r.outcome));
        return kExitYes;
    });
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    return report_error(err, [&] {
        const Instance inst = read_instance_file(opt.instance_path);
        const Outcome outcome = outcome_from_json(read_json_file(opt.outcome_path), inst.n());
        const CheckResult r = check_outcome(inst, outcome, opt.notion);
        out << to_string(r.status);
        if (!r.detail.empty()) out << ": " << r.detail;
        out << '\n';
        return r.status == CheckResult::Status::Stable ? kExitYes : kExitNo;
    });
}

BenchReport run_bench(const BenchOptions& opt, const SearchLimits& limits) {
    BenchReport rep;
    std::ostringstream os;
    std::mt19937_64 rng(opt.seed);
    constexpr Algo kAll[] = {Algo::Brute,       Algo::BrutePositions, Algo::ColorsSize,
                             Algo::ColorsTypes, Algo::ColorsNtcoal,   Algo::ColorsTotcoal};
    for (int i = 0; i < opt.count; ++i) {
        const Instance inst = random_instance(rng, opt.caps);
        ++rep.instances;
        const bool own = is_own_color(inst);
        rep.own_color += own;
        bool disagree = false;
        std::ostringstream detail;
        for (Notion notion : {Notion::NS, Notion::IS}) {
            std::optional<bool> reference;
            std::vector<Algo> algos(std::begin(kAll), std::end(kAll));
            if (own && notion == Notion::NS) algos.push_back(Algo::OwnNash);
            for (Algo algo : algos) {
                const SolveResult r = solve(inst, notion, algo, limits);
                ++rep.solver_runs;
                const bool yes = r.outcome.has_value();
                if (!reference) reference = yes;
                if (yes != *reference) {
                    disagree = true;
                    detail << "  " << to_string(notion) << ": " << to_string(algo) << " says " << (yes ? "YES" : "NO")
                           << ", brute says " << (*reference ? "YES" : "NO") << '\n';
                }
                if (yes) {
                    const CheckResult c = check_outcome(inst, *r.outcome, notion);
                    if (c.status != CheckResult::Status::Stable) {
                        disagree = true;
                        detail << "  " << to_string(notion) << ": " << to_string(algo) << " witness "
                               << r.outcome->str() << " is " << to_string(c.status) << '\n';
                    }
                }
            }
        }
        if (disagree) {
            ++rep.disagreements;
            const auto path = std::filesystem::path(opt.triage_dir) /
                              ("bench_" + std::to_string(opt.seed) + "_" + std::to_string(i) + ".json");
            write_text_file(path, serialize_instance(inst));
            os << "instance " << i << " (" << parameter_line(inst) << ") disagrees, saved to " << path.string() << '\n'
               << detail.str();
        }
    }
    os << "seed=" << opt.seed << " instances=" << rep.instances << " own_color=" << rep.own_color
       << " solver_runs=" << rep.solver_runs << " disagreements=" << rep.disagreements << '\n';
    rep.text = os.str();
    return rep;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    return report_error(err, [&] {
        const BenchReport rep = run_bench(opt);
        out << rep.text;
        return rep.disagreements == 0 ? kExitYes : kExitNo;
    });
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    return report_error(err, [&] {
        const Json src = read_json_file(opt.source_path);
        std::optional<Instance> inst;
        if (opt.kind == "x3c") {
            inst = from_x3c(x3c_from_json(src)).instance;
        } else if (opt.kind == "partition") {
            inst = from_partition(partition_from_json(src), opt.notion).instance;
        } else if (opt.kind == "mss") {
            inst = from_mss(mss_from_json(src)).instance;
        } else if (opt.kind == "indset") {
            inst = from_independent_set(indset_from_json(src)).instance;
        } else if (opt.kind == "sgasp") {
            inst = from_sgasp(sgasp_from_json(src), opt.normalized);
        } else {
            throw InvalidInput("unknown reduction '" + opt.kind + "'");
        }
        const std::string text = serialize_instance(*inst);
        if (opt.out_path.empty()) {
            out << text;
        } else {
            write_text_file(opt.out_path, text);
            out << parameter_line(*inst) << '\n';
        }
        return kExitYes;
    });
}

}  // namespace hdg
