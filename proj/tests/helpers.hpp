#pragma once

#include <random>
#include <utility>
#include <vector>

#include "netdesign/bounds.hpp"
#include "netdesign/design.hpp"
#include "netdesign/frequency.hpp"

namespace testutil {

// Instance from explicit coordinates (meters); default weights and physics.
inline netdesign::Instance instance_at(const std::vector<std::pair<double, double>>& pts) {
    netdesign::Instance inst;
    for (std::size_t i = 0; i < pts.size(); ++i)
        inst.nodes.push_back({static_cast<int>(i), pts[i].first, pts[i].second});
    inst.validate();
    return inst;
}

// n nodes on a circle plus node 0 at the center; radius in meters.
inline netdesign::Instance ring_instance(int n, double radius_m) {
    std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
    for (int i = 1; i < n; ++i) {
        const double a = netdesign::kTwoPi * (i - 1) / (n - 1);
        pts.emplace_back(radius_m * std::cos(a), radius_m * std::sin(a));
    }
    return instance_at(pts);
}

// Independent Pruefer decoder; doubles as an oracle for tree enumeration.
inline netdesign::Topology tree_from_sequence(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<netdesign::Edge> edges;
    std::vector<char> used(n, 0);
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (deg[leaf] == 1 && !used[leaf]) {
                edges.push_back(netdesign::make_edge(leaf, s));
                used[leaf] = 1;
                --deg[s];
                break;
            }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
    edges.push_back(netdesign::make_edge(a, b));
    return netdesign::topology_from_edges(n, std::move(edges));
}

inline netdesign::Topology random_tree(int n, std::mt19937_64& rng) {
    if (n == 2) return tree_from_sequence({});
    std::vector<int> seq(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& s : seq) s = pick(rng);
    return tree_from_sequence(seq);
}

// Complete design: given hub, first enumerated partition, straight polarity,
// cached antennas, greedy frequencies. Returns the design and its objective.
inline std::pair<netdesign::Design, double> assemble_design(
    const netdesign::Instance& inst, const netdesign::Topology& t, int hub,
    netdesign::FrequencyMode mode = netdesign::FrequencyMode::grouped) {
    using namespace netdesign;
    Design d;
    d.rooted = root_at(t, hub);
    d.partition = enumerate_partitions(inst, d.rooted).front();
    d.channels = assign_channels(d.rooted, d.partition, false);
    AntennaCache cache(inst);
    d.antennas = build_antennas(inst, d.rooted, d.partition, d.channels, cache);
    Evaluator eval(inst);
    eval.bind(d.rooted, d.channels, d.antennas);
    const FrequencyResult fr = greedy_frequency_assignment(eval, mode);
    d.freq_mhz = fr.freq_mhz;
    return {std::move(d), fr.objective};
}

}  // namespace testutil
