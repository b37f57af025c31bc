#include "netdesign/frequency.hpp"

#include <stdexcept>
#include <utility>

namespace netdesign {

namespace {

// A decision step is either a whole group or a single edge of it.
struct Step {
    bool whole_group;
    int index;
};

std::vector<Step> decision_list(const Evaluator& eval, FrequencyMode mode) {
    std::vector<Step> steps;
    if (mode == FrequencyMode::grouped) {
        for (std::size_t g = 0; g < eval.groups().size(); ++g)
            steps.push_back({true, static_cast<int>(g)});
    } else {
        for (const auto& g : eval.groups())
            for (int e : g.edges) steps.push_back({false, e});
    }
    return steps;
}

void apply_step(Evaluator& eval, const Step& s, int hi, Evaluator::Undo* undo) {
    if (s.whole_group)
        eval.assign_group(s.index, hi, undo);
    else
        eval.assign_edge(s.index, hi, undo);
}

FrequencyResult collect(Evaluator& eval, int steps) {
    FrequencyResult res;
    res.decision_steps = steps;
    res.breakdown = eval.breakdown();
    res.objective = res.breakdown.total;
    res.freq_mhz.resize(eval.edge_count());
    for (int e = 0; e < eval.edge_count(); ++e) res.freq_mhz[e] = eval.edge_freq_mhz(e);
    return res;
}

}  // namespace

FrequencyResult greedy_frequency_assignment(Evaluator& eval, FrequencyMode mode) {
    eval.reset_assignment();
    const auto steps = decision_list(eval, mode);
    for (const Step& s : steps) {
        Evaluator::Undo lo;
        apply_step(eval, s, 0, &lo);
        const double val_lo = eval.objective();
        eval.unassign(lo);

        Evaluator::Undo hi;
        apply_step(eval, s, 1, &hi);
        const double val_hi = eval.objective();
        if (val_hi < val_lo) {
            eval.unassign(hi);
            Evaluator::Undo redo;
            apply_step(eval, s, 0, &redo);
        }
    }
    return collect(eval, static_cast<int>(steps.size()));
}

FrequencyResult exhaustive_frequency_oracle(Evaluator& eval, FrequencyMode mode) {
    eval.reset_assignment();
    const auto steps = decision_list(eval, mode);
    if (steps.size() > 20)
        throw std::invalid_argument("exhaustive_frequency_oracle: too many decisions");

    double best = -1.0;
    bool have_best = false;
    std::vector<int> bits(steps.size(), 0), best_bits;

    // Depth-first over all 2^k assignments, low frequency first, so ties keep
    // the lexicographically smallest bit string.
    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (depth == steps.size()) {
            const double val = eval.objective();
            if (!have_best || val > best) {
                have_best = true;
                best = val;
                best_bits = bits;
            }
            return;
        }
        for (int hi = 0; hi < 2; ++hi) {
            Evaluator::Undo undo;
            apply_step(eval, steps[depth], hi, &undo);
            bits[depth] = hi;
            self(self, depth + 1);
            eval.unassign(undo);
        }
    };
    dfs(dfs, 0);

    for (std::size_t d = 0; d < steps.size(); ++d) {
        Evaluator::Undo undo;
        apply_step(eval, steps[d], best_bits[d], &undo);
    }
    return collect(eval, static_cast<int>(steps.size()));
}

}  // namespace netdesign
