#pragma once

#include <cstdint>

#include "netdesign/core.hpp"

namespace netdesign {

struct GeneratorOptions {
    int n = 10;
    double area_m = 2000.0;
    std::uint64_t seed = 1;
    int max_attempts_per_node = 10000;
};

// Uniform nodes over a square with default weights and physics. Placement
// is rejection-sampled so every pair is usable (nothing in E_not) and no
// two nodes sit closer than 1 m; such an instance always admits the greedy
// initial topology. Deterministic per seed; throws if the area cannot
// accommodate the nodes within the attempt budget.
Instance generate_instance(const GeneratorOptions& opt);

}  // namespace netdesign
