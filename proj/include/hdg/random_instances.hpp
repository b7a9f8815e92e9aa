#pragma once

#include <cstdint>
#include <random>

#include "hdg/core.hpp"

namespace hdg {

struct RandomCaps {
    int max_n = 7;
    int max_gamma = 3;
    int max_types = 3;
    int max_sigma = 5;
    int max_rho1 = 5;
    int max_rho2 = 2;
};

/// Small random instance with tier-list preferences over palettes that fit
/// in n agents. Roughly one in three instances is own-color.
Instance random_instance(std::mt19937_64& rng, const RandomCaps& caps = {});

}  // namespace hdg
