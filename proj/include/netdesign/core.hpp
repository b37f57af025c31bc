#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "netdesign/geometry.hpp"
#include "netdesign/physics.hpp"

namespace netdesign {

// Degree rules for a deployable tree: every node has two antennas, the hub
// may split up to 20 neighbors across them, anyone else serves one uplink
// plus at most 10 downlinks.
inline constexpr int kMaxOrdinaryDegree = 11;
inline constexpr int kMaxHubDegree = 20;
inline constexpr int kMaxBlockSize = 10;

struct Node {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
};

struct Instance {
    std::vector<Node> nodes;
    double weight_a = 1.0;
    double weight_b = 1.0;
    double weight_c = 1.0;
    double mean_weight = 1.0;  // multiplier on the mean term of the objective
    PhysicsParams physics;
    std::uint64_t seed = 0;

    int size() const { return static_cast<int>(nodes.size()); }
    double distance_m(int u, int v) const;
    double bearing(int u, int v) const {
        return bearing_rad(nodes[u].x, nodes[u].y, nodes[v].x, nodes[v].y);
    }

    // Throws std::invalid_argument on malformed input (duplicate ids,
    // non-finite coordinates, bad weights or physics).
    void validate() const;
};

using Edge = std::pair<int, int>;  // normalized u < v

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Topology {
    int n = 0;
    std::vector<Edge> edges;  // normalized and sorted ascending

    bool has_edge(const Edge& e) const;
};

Topology topology_from_edges(int n, std::vector<Edge> edges);

std::vector<int> degrees(const Topology& t);
std::vector<std::vector<int>> adjacency(const Topology& t);  // sorted lists

// Spanning tree with at most one vertex of degree > 11, none > 20.
bool is_valid_topology(const Topology& t);

// Tree rooted at the designated hub. parent[hub] == -1; children lists are
// ascending; subtree_size[v] counts v itself.
struct RootedTopology {
    Topology topology;
    int hub = -1;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> subtree_size;
    std::vector<int> depth;
    std::vector<int> edge_child;  // per edge index: the child endpoint
};

// Throws std::invalid_argument if t is not a valid topology or hub cannot
// legally be the master (some other vertex has degree > 11).
RootedTopology root_at(const Topology& t, int hub);

int eccentricity(const Topology& t, int v);

// Hub candidate set: the unique vertex of degree > 11 when one exists,
// otherwise the non-leaf nodes whose degree-rank plus centrality-rank score
// reaches the (lower) median score. A 2-node tree yields both nodes.
std::vector<int> master_hub_candidates(const Topology& t);

}  // namespace netdesign
