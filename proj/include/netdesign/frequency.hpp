#pragma once

#include "netdesign/objective.hpp"

namespace netdesign {

// Group-wise is the canonical decision model: each decision step fixes one
// common frequency for all same-channel sibling edges under one parent.
// per_edge relaxes that to an independent choice per edge.
enum class FrequencyMode { grouped, per_edge };

struct FrequencyResult {
    std::vector<double> freq_mhz;  // per edge
    double objective = 0.0;
    ObjectiveBreakdown breakdown;
    int decision_steps = 0;
};

// Walks the decision steps in BFS order; at each step keeps whichever of
// the two frequencies scores the higher partial objective over the edges
// assigned so far, preferring the higher frequency on ties. The evaluator
// must be bound to the design under construction.
FrequencyResult greedy_frequency_assignment(Evaluator& eval,
                                            FrequencyMode mode = FrequencyMode::grouped);

// True optimum over every assignment the active mode admits, by full
// enumeration. Guarded: at most 20 decisions. Test oracle and small-n
// reference; shares the evaluator so values are comparable bit for bit.
FrequencyResult exhaustive_frequency_oracle(Evaluator& eval,
                                            FrequencyMode mode = FrequencyMode::grouped);

}  // namespace netdesign
