#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "netdesign/design.hpp"

namespace netdesign {

// Concurrent stream counts per edge for the three traffic scenarios:
// one stream (A), one per node in the child-side subtree (B), one per
// ordered node pair routed across the edge (C).
struct ScenarioStreams {
    double n_a = 1.0;
    double n_b = 1.0;
    double n_c = 1.0;
};

std::vector<ScenarioStreams> scenario_streams(const RootedTopology& rooted);

struct ObjectiveBreakdown {
    std::array<double, 3> min_tp{};   // worst effective throughput, per scenario
    std::array<double, 3> mean_tp{};  // mean effective throughput, per scenario
    double total = 0.0;
};

struct LinkMetrics {
    int edge = -1;
    double freq_mhz = 0.0;
    double gain_fwd_db = 0.0;  // at the parent endpoint, toward the child
    double gain_rev_db = 0.0;
    double path_loss_db = 0.0;
    double signal_dbm = 0.0;
    double interference_mw = 0.0;
    double sinr_db = 0.0;
    double throughput_mbps = 0.0;
};

// Sum of the leaked power (linear mW) from every third node whose antenna
// on freq's channel carries at least one edge assigned that frequency.
double interference_mw(const Instance& inst, const Design& design,
                       int edge_idx, double freq_mhz);

struct EvaluationResult {
    ObjectiveBreakdown breakdown;
    std::vector<LinkMetrics> links;
};

// Reference evaluation of a complete design, computed from scratch with no
// incremental state. The search stack uses Evaluator below; tests hold the
// two routes against each other.
EvaluationResult evaluate_design(const Instance& inst, const Design& design);

// Interference-free objective estimate: each edge scores the mean over its
// channel's two frequencies of the zero-interference throughput. No
// frequency assignment is consumed.
double estimate_objective(const Instance& inst, const RootedTopology& rooted,
                          const ChannelAssignment& channels,
                          const std::vector<std::optional<AntennaConfig>>& antennas,
                          ObjectiveBreakdown* breakdown = nullptr);

// Incremental design evaluator. Bind once per (rooted tree, channel
// assignment, antenna table), then assign frequency decisions group by
// group; the partial objective covers assigned edges only. Assignments are
// undoable, which is what the greedy assigner and the exhaustive
// enumerators are built on. One instance is meant to be reused across many
// binds; all buffers persist.
class Evaluator {
  public:
    explicit Evaluator(const Instance& inst);

    void bind(const RootedTopology& rooted, const ChannelAssignment& channels,
              const std::vector<std::optional<AntennaConfig>>& antennas);

    // One frequency decision: same-channel sibling edges under one parent.
    // Ordered by BFS, hub blocks first (block with the smallest child
    // leads), one group per child-bearing node below the hub.
    struct Group {
        int channel = 0;
        std::vector<int> edges;
    };
    const std::vector<Group>& groups() const { return groups_; }

    struct Undo {
        std::vector<int> edges;                          // assigned by this op
        std::vector<std::pair<int, double>> i_touched;   // edge -> prior value
        std::vector<int> user_slots;                     // slots newly using fid
        int fid = -1;                                    // a group is single-fid
    };

    // hi selects the channel's higher frequency. Updates interference both
    // ways (new edges pick up existing co-channel users, existing edges see
    // the new endpoints).
    void assign_group(int group_idx, int hi, Undo* undo);
    void assign_edge(int edge_idx, int hi, Undo* undo);
    void unassign(const Undo& undo);
    void reset_assignment();

    double objective() const;  // over assigned edges
    ObjectiveBreakdown breakdown() const;
    void link_metrics(std::vector<LinkMetrics>* out);
    bool fully_assigned() const { return assigned_ == edge_count(); }
    int freq_bit(int edge_idx) const { return freq_bit_[edge_idx]; }
    double edge_freq_mhz(int edge_idx) const;

    double estimate(ObjectiveBreakdown* breakdown = nullptr);

    int edge_count() const { return static_cast<int>(edge_child_.size()); }

  private:
    double gain(int slot, int target);
    double pl_db(int u, int v, int fid) const;
    double desired_signal_dbm(int e, int fid);
    double pair_term(int from, int from_slot, int to, int to_slot, int fid);
    void do_assign_edge(int e, int hi, int fid, Undo* undo);

    const Instance* inst_;
    // instance-lifetime tables
    std::vector<double> log10_d_km_;  // n*n
    std::array<double, 4> log10_f_{};
    std::array<double, 4> freq_mhz_{};
    double noise_lin_ = 0.0;

    // per-bind tables
    const RootedTopology* rooted_ = nullptr;
    const ChannelAssignment* chan_ = nullptr;
    const std::vector<std::optional<AntennaConfig>>* antennas_ = nullptr;
    std::vector<int> edge_child_;
    std::vector<int> edge_parent_;
    std::vector<int> edge_channel_;
    std::vector<ScenarioStreams> streams_;
    std::vector<Group> groups_;
    std::vector<double> gain_cache_;  // 2n * n, NaN = not yet computed

    // assignment state
    std::vector<signed char> freq_bit_;            // -1 unassigned
    std::vector<double> s_dbm_;
    std::vector<double> i_lin_;
    std::vector<std::vector<int>> fid_edges_;      // assigned edges per fid
    std::vector<std::vector<int>> fid_users_;      // antenna slots per fid
    std::vector<std::array<int, 2>> usage_;        // per slot: count per bit
    int assigned_ = 0;
};

}  // namespace netdesign
