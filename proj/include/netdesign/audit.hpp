#pragma once

#include <string>
#include <vector>

#include "netdesign/objective.hpp"

namespace netdesign {

// Structural and numeric invariants of a finished design: tree validity,
// partition coverage, channel alternation, per-edge frequency membership,
// antenna coverage, and (optionally) agreement of a claimed objective with
// a from-scratch evaluation. Returns human-readable violations; empty means
// clean.
std::vector<std::string> audit_design(const Instance& inst, const Design& design,
                                      const double* claimed_objective = nullptr);

}  // namespace netdesign
