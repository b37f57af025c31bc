#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <string>

#include "netdesign/bounds.hpp"

namespace netdesign {

// FIFO tabu memory. `removal` holds recently added edges (forbidden from
// being removed), `addition` holds recently removed edges (forbidden from
// coming back). Capacities follow ceil(sqrt(n-1)/2) and
// ceil(sqrt(n(n-1)/2)).
struct TabuLists {
    std::size_t removal_capacity = 0;
    std::size_t addition_capacity = 0;
    std::deque<Edge> removal;
    std::deque<Edge> addition;

    static TabuLists for_size(int n);

    bool removal_forbidden(const Edge& e) const;
    bool addition_forbidden(const Edge& e) const;
    void push_removed(const Edge& e);  // forbids re-adding e
    void push_added(const Edge& e);    // forbids removing e
    bool evict_oldest_addition();
    bool evict_oldest_removal();
};

// Degree-constrained greedy spanning tree over mean path loss: edges in
// ascending mean-loss order, skipping unusable pairs, cycles, and degree
// violations. Throws with the leftover components named if it cannot span.
Topology initial_topology(const Instance& inst, const std::vector<char>& e_not);

struct Move {
    Edge removed;
    Edge added;
};

// All single-swap neighbors of t that stay valid: remove a non-tabu edge,
// reconnect the two components with any non-tabu, usable pair. Deterministic
// order (edges ascending, additions ascending).
std::vector<Move> neighborhood(const Topology& t, const TabuLists& tabu,
                               const std::vector<char>& e_not);

Topology apply_move(const Topology& t, const Move& m);

enum class Algorithm { tabu1, tabu2, tbs };

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

struct SolverConfig {
    Algorithm algorithm = Algorithm::tabu2;
    std::optional<double> time_limit_s;
    std::optional<std::uint64_t> iteration_budget;
    int lambda = 0;  // <= 0: defaults to n; tabu2 restart period
    int kappa = 8;   // tbs pool width
    bool aspiration = true;
    std::uint64_t seed = 0;
    FrequencyMode mode = FrequencyMode::grouped;
    bool audit = false;         // validate every accepted design/topology
    bool collect_moves = false; // record the chosen swap per iteration
    bool lambda_is_default = true;
    bool kappa_is_default = true;
    // Test hook: evaluate tabu2 neighbors with lb1 instead of the inherited
    // (hub, partition) lb2. With restarts disabled this mirrors tabu1.
    bool tabu2_eval_with_lb1 = false;
    bool tabu2_disable_restarts = false;
};

struct TracePoint {
    std::uint64_t iteration = 0;
    double elapsed_s = 0.0;
    double best_objective = 0.0;
};

struct SolveResult {
    Design best;
    double best_value = 0.0;
    ObjectiveBreakdown breakdown;
    std::uint64_t iterations = 0;
    double wall_seconds = 0.0;
    std::vector<TracePoint> trace;
    std::vector<Move> moves;            // when collect_moves
    std::vector<std::string> audit_log; // violations found in audit mode
};

SolveResult solve(const Instance& inst, const SolverConfig& cfg);

// Global optimum by full enumeration: every labeled tree, every valid hub,
// every 2-block split of its neighbors, both polarities, every frequency
// assignment of the active mode. Guarded to n <= 6.
BoundResult exhaustive_solver(const Instance& inst,
                              FrequencyMode mode = FrequencyMode::grouped);

// Same enumeration with the topology held fixed; exact f(T).
BoundResult exhaustive_best_for_topology(const Instance& inst, const Topology& t,
                                         FrequencyMode mode = FrequencyMode::grouped);

}  // namespace netdesign
