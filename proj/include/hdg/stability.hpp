#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdg/core.hpp"

namespace hdg {

/// A partition of the agents into coalitions.
class Outcome {
public:
    Outcome() = default;
    /// Validates the partition property against n agents; throws InvalidOutcome.
    Outcome(std::vector<std::vector<AgentId>> coalitions, int n);

    static Outcome singletons(int n);

    int num_agents() const { return static_cast<int>(member_of_.size()); }
    int size() const { return static_cast<int>(coalitions_.size()); }
    const std::vector<std::vector<AgentId>>& coalitions() const { return coalitions_; }
    const std::vector<AgentId>& coalition(int idx) const { return coalitions_.at(static_cast<std::size_t>(idx)); }
    int member_of(AgentId a) const { return member_of_.at(static_cast<std::size_t>(a)); }

    int nontrivial_count() const;
    int max_size() const;

    /// Same partition with coalitions and members sorted.
    Outcome canonical() const;
    std::string str(const Instance* inst = nullptr) const;

    friend bool operator==(const Outcome& a, const Outcome& b) { return a.coalitions_ == b.coalitions_; }

private:
    std::vector<std::vector<AgentId>> coalitions_;
    std::vector<int> member_of_;
};

struct Deviation {
    static constexpr int kEmpty = -1;

    AgentId agent = 0;
    int target = kEmpty;  // coalition index, or kEmpty for leaving to be alone
    Notion kind = Notion::NS;

    friend bool operator==(const Deviation&, const Deviation&) = default;
    std::string str(const Instance* inst = nullptr) const;
};

/// First deviation in (agent id, target index, EMPTY last) order.
std::optional<Deviation> find_ns_deviation(const Instance& inst, const Outcome& outcome);
std::optional<Deviation> find_is_deviation(const Instance& inst, const Outcome& outcome);
std::optional<Deviation> find_deviation(const Instance& inst, const Outcome& outcome, Notion notion);

/// Re-checks a deviation witness against the definition.
bool is_deviation(const Instance& inst, const Outcome& outcome, const Deviation& d);

struct CheckResult {
    enum class Status { Stable, Unstable, BudgetViolation };

    Status status = Status::Stable;
    std::optional<Deviation> deviation;
    std::string detail;

    bool stable() const { return status == Status::Stable; }
};

const char* to_string(CheckResult::Status s);

/// Budget violations are reported before stability.
CheckResult check_outcome(const Instance& inst, const Outcome& outcome, Notion notion);
std::optional<std::string> budget_violation(const Budgets& budgets, const Outcome& outcome);

}  // namespace hdg
