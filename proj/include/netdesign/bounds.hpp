#pragma once

#include "netdesign/frequency.hpp"

namespace netdesign {

// Shared workspace for bound computations: one evaluator plus the antenna
// memo, reused across calls so the hot loops stay allocation-free.
struct BoundContext {
    explicit BoundContext(const Instance& inst)
        : instance(&inst), cache(inst), eval(inst) {}

    const Instance* instance;
    AntennaCache cache;
    Evaluator eval;
    FrequencyMode mode = FrequencyMode::grouped;
};

struct BoundResult {
    double value = 0.0;
    Design design;
    ObjectiveBreakdown breakdown;
};

// Best greedy-frequency objective over every candidate hub, every
// angularly consecutive partition, and both channel polarities. Ties keep
// the first candidate in iteration order.
BoundResult lb1(BoundContext& ctx, const Topology& t);

// Same inner loop with the hub and partition fixed (both polarities, greedy
// frequencies). The antenna table is rebuilt through the cache, so nodes
// whose link sets did not change get their previous configurations back.
BoundResult lb2(BoundContext& ctx, const Topology& t, int hub,
                const Partition& partition);

}  // namespace netdesign
