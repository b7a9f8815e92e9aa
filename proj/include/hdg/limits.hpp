#pragma once

#include <cstdint>
#include <string>

#include "hdg/core.hpp"

namespace hdg {

/// Explosion guards shared by all solvers.
struct SearchLimits {
    std::uint64_t max_states = 50'000'000;  // branches, guesses, DP patterns
    int brute_max_n = 12;
    int positions_max = 32;  // effective rho2 * sigma for the position solver

    /// Defaults, with HDG_SEARCH_CAP overriding max_states when set.
    static SearchLimits from_env();
};

/// Counts explored states and throws SearchSpaceTooLarge past the cap.
class SearchCounter {
public:
    SearchCounter(std::uint64_t cap, std::string what) : cap_(cap), what_(std::move(what)) {}
    void tick(std::uint64_t k = 1) {
        count_ += k;
        if (count_ > cap_) {
            throw SearchSpaceTooLarge(what_ + " exceeded the search cap of " + std::to_string(cap_) +
                                      " (raise HDG_SEARCH_CAP to continue)");
        }
    }
    std::uint64_t count() const { return count_; }

private:
    std::uint64_t cap_;
    std::uint64_t count_ = 0;
    std::string what_;
};

}  // namespace hdg
