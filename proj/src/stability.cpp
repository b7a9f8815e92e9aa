#include "hdg/stability.hpp"

#include <algorithm>
#include <sstream>

namespace hdg {

Outcome::Outcome(std::vector<std::vector<AgentId>> coalitions, int n)
    : coalitions_(std::move(coalitions)), member_of_(static_cast<std::size_t>(n), -1) {
    for (std::size_t i = 0; i < coalitions_.size(); ++i) {
        if (coalitions_[i].empty()) throw InvalidOutcome("coalition " + std::to_string(i) + " is empty");
        for (AgentId a : coalitions_[i]) {
            if (a < 0 || a >= n) throw InvalidOutcome("agent id " + std::to_string(a) + " out of range");
            auto& slot = member_of_[static_cast<std::size_t>(a)];
            if (slot >= 0) throw InvalidOutcome("agent " + std::to_string(a) + " appears in two coalitions");
            slot = static_cast<int>(i);
        }
    }
    for (int a = 0; a < n; ++a) {
        if (member_of_[static_cast<std::size_t>(a)] < 0) {
            throw InvalidOutcome("agent " + std::to_string(a) + " is not in any coalition");
        }
    }
}

Outcome Outcome::singletons(int n) {
    std::vector<std::vector<AgentId>> cs;
    for (int a = 0; a < n; ++a) cs.push_back({a});
    return Outcome(std::move(cs), n);
}

int Outcome::nontrivial_count() const {
    return static_cast<int>(std::count_if(coalitions_.begin(), coalitions_.end(), [](const auto& c) { return c.size() > 1; }));
}

int Outcome::max_size() const {
    std::size_t m = 0;
    for (const auto& c : coalitions_) m = std::max(m, c.size());
    return static_cast<int>(m);
}

Outcome Outcome::canonical() const {
    auto cs = coalitions_;
    for (auto& c : cs) std::sort(c.begin(), c.end());
    std::sort(cs.begin(), cs.end());
    return Outcome(std::move(cs), num_agents());
}

std::string Outcome::str(const Instance* inst) const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < coalitions_.size(); ++i) {
        if (i) os << ", ";
        os << '{';
        for (std::size_t j = 0; j < coalitions_[i].size(); ++j) {
            if (j) os << ',';
            os << (inst ? inst->agent_name(coalitions_[i][j]) : std::to_string(coalitions_[i][j]));
        }
        os << '}';
    }
    os << '}';
    return os.str();
}

std::string Deviation::str(const Instance* inst) const {
    std::ostringstream os;
    os << to_string(kind) << "-deviation: agent " << (inst ? inst->agent_name(agent) : std::to_string(agent)) << " -> ";
    if (target == kEmpty) {
        os << "EMPTY";
    } else {
        os << "coalition #" << target;
    }
    return os.str();
}

namespace {

void require_matching(const Instance& inst, const Outcome& outcome) {
    if (outcome.num_agents() != inst.n()) {
        throw InvalidOutcome("outcome covers " + std::to_string(outcome.num_agents()) + " agents, instance has " +
                             std::to_string(inst.n()));
    }
}

// Whether `agent` strictly gains by moving into `target` (kEmpty allowed),
// and, for IS, whether every member of the target weakly accepts it.
bool deviates(const Instance& inst, const Outcome& outcome, const std::vector<Composition>& comps, AgentId agent,
              int target, Notion notion) {
    const int own = outcome.member_of(agent);
    if (target == own) return false;
    const ColorId c = inst.color_of(agent);
    const Palette current = comps[static_cast<std::size_t>(own)].palette();
    if (target == Deviation::kEmpty) {
        return inst.rank(agent, Palette::unit(inst.gamma(), c)) > inst.rank(agent, current);
    }
    const Composition& dest = comps[static_cast<std::size_t>(target)];
    const Palette joined = dest.plus(c).palette();
    if (inst.rank(agent, joined) <= inst.rank(agent, current)) return false;
    if (notion == Notion::NS) return true;
    const Palette before = dest.palette();
    for (AgentId j : outcome.coalition(target)) {
        if (inst.rank(j, joined) < inst.rank(j, before)) return false;
    }
    return true;
}

std::vector<Composition> compositions(const Instance& inst, const Outcome& outcome) {
    std::vector<Composition> comps;
    comps.reserve(static_cast<std::size_t>(outcome.size()));
    for (const auto& c : outcome.coalitions()) comps.push_back(composition_of(c, inst));
    return comps;
}

}  // namespace

std::optional<Deviation> find_deviation(const Instance& inst, const Outcome& outcome, Notion notion) {
    require_matching(inst, outcome);
    const auto comps = compositions(inst, outcome);
    for (AgentId a = 0; a < inst.n(); ++a) {
        for (int target = 0; target < outcome.size(); ++target) {
            if (deviates(inst, outcome, comps, a, target, notion)) return Deviation{a, target, notion};
        }
        if (deviates(inst, outcome, comps, a, Deviation::kEmpty, notion)) return Deviation{a, Deviation::kEmpty, notion};
    }
    return std::nullopt;
}

std::optional<Deviation> find_ns_deviation(const Instance& inst, const Outcome& outcome) {
    return find_deviation(inst, outcome, Notion::NS);
}

std::optional<Deviation> find_is_deviation(const Instance& inst, const Outcome& outcome) {
    return find_deviation(inst, outcome, Notion::IS);
}

bool is_deviation(const Instance& inst, const Outcome& outcome, const Deviation& d) {
    require_matching(inst, outcome);
    if (d.agent < 0 || d.agent >= inst.n()) return false;
    if (d.target != Deviation::kEmpty && (d.target < 0 || d.target >= outcome.size())) return false;
    return deviates(inst, outcome, compositions(inst, outcome), d.agent, d.target, d.kind);
}

const char* to_string(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Stable: return "Stable";
        case CheckResult::Status::Unstable: return "Unstable";
        case CheckResult::Status::BudgetViolation: return "BudgetViolation";
    }
    return "?";
}

std::optional<std::string> budget_violation(const Budgets& budgets, const Outcome& outcome) {
    if (outcome.size() > budgets.rho1) {
        return std::to_string(outcome.size()) + " coalitions exceed rho1=" + std::to_string(budgets.rho1);
    }
    if (outcome.nontrivial_count() > budgets.rho2) {
        return std::to_string(outcome.nontrivial_count()) + " non-trivial coalitions exceed rho2=" +
               std::to_string(budgets.rho2);
    }
    if (outcome.max_size() > budgets.sigma) {
        return "a coalition of size " + std::to_string(outcome.max_size()) + " exceeds sigma=" +
               std::to_string(budgets.sigma);
    }
    return std::nullopt;
}

CheckResult check_outcome(const Instance& inst, const Outcome& outcome, Notion notion) {
    require_matching(inst, outcome);
    if (auto v = budget_violation(inst.budgets(), outcome)) {
        return {CheckResult::Status::BudgetViolation, std::nullopt, *v};
    }
    if (auto d = find_deviation(inst, outcome, notion)) {
        return {CheckResult::Status::Unstable, d, d->str(&inst)};
    }
    return {};
}

}  // namespace hdg
