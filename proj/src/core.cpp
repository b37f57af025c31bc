#include "netdesign/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace netdesign {

double Instance::distance_m(int u, int v) const {
    double dx = nodes[u].x - nodes[v].x;
    double dy = nodes[u].y - nodes[v].y;
    return std::sqrt(dx * dx + dy * dy);
}

void Instance::validate() const {
    if (nodes.size() < 2) throw std::invalid_argument("instance: need at least 2 nodes");
    std::vector<char> seen(nodes.size(), 0);
    for (const Node& nd : nodes) {
        if (nd.id < 0 || nd.id >= static_cast<int>(nodes.size()))
            throw std::invalid_argument("instance: node id " + std::to_string(nd.id) +
                                        " out of range");
        if (seen[nd.id]) throw std::invalid_argument("instance: duplicate node id " +
                                                     std::to_string(nd.id));
        seen[nd.id] = 1;
        if (!std::isfinite(nd.x) || !std::isfinite(nd.y))
            throw std::invalid_argument("instance: non-finite coordinates at node " +
                                        std::to_string(nd.id));
    }
    for (int i = 0; i < size(); ++i)
        if (nodes[i].id != i)
            throw std::invalid_argument("instance: nodes must be sorted by id");
    if (weight_a < 0 || weight_b < 0 || weight_c < 0 || mean_weight < 0)
        throw std::invalid_argument("instance: weights must be non-negative");
    if (weight_a + weight_b + weight_c <= 0)
        throw std::invalid_argument("instance: at least one scenario weight must be positive");
    physics.validate();
}

bool Topology::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Topology topology_from_edges(int n, std::vector<Edge> edges) {
    Topology t;
    t.n = n;
    for (Edge& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    t.edges = std::move(edges);
    return t;
}

std::vector<int> degrees(const Topology& t) {
    std::vector<int> deg(t.n, 0);
    for (const Edge& e : t.edges) {
        ++deg[e.first];
        ++deg[e.second];
    }
    return deg;
}

std::vector<std::vector<int>> adjacency(const Topology& t) {
    std::vector<std::vector<int>> adj(t.n);
    for (const Edge& e : t.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

bool is_valid_topology(const Topology& t) {
    if (t.n < 2) return false;
    if (static_cast<int>(t.edges.size()) != t.n - 1) return false;
    std::vector<int> deg(t.n, 0);
    for (const Edge& e : t.edges) {
        if (e.first < 0 || e.second >= t.n || e.first >= e.second) return false;
        ++deg[e.first];
        ++deg[e.second];
    }
    int over = 0;
    for (int d : deg) {
        if (d > kMaxHubDegree) return false;
        if (d > kMaxOrdinaryDegree) ++over;
    }
    if (over > 1) return false;
    // connectivity: n-1 edges + all reachable = tree
    auto adj = adjacency(t);
    std::vector<char> vis(t.n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (!vis[w]) {
                vis[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == t.n;
}

RootedTopology root_at(const Topology& t, int hub) {
    if (!is_valid_topology(t)) throw std::invalid_argument("root_at: invalid topology");
    if (hub < 0 || hub >= t.n) throw std::invalid_argument("root_at: hub out of range");
    std::vector<int> deg = degrees(t);
    for (int v = 0; v < t.n; ++v)
        if (deg[v] > kMaxOrdinaryDegree && v != hub)
            throw std::invalid_argument(
                "root_at: vertex " + std::to_string(v) +
                " exceeds degree 11 and must be the hub");

    RootedTopology r;
    r.topology = t;
    r.hub = hub;
    r.parent.assign(t.n, -1);
    r.children.assign(t.n, {});
    r.subtree_size.assign(t.n, 1);
    r.depth.assign(t.n, 0);

    auto adj = adjacency(t);
    std::vector<int> order;
    order.reserve(t.n);
    std::queue<int> q;
    q.push(hub);
    std::vector<char> vis(t.n, 0);
    vis[hub] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int w : adj[u])
            if (!vis[w]) {
                vis[w] = 1;
                r.parent[w] = u;
                r.depth[w] = r.depth[u] + 1;
                r.children[u].push_back(w);  // adjacency is sorted -> ascending
                q.push(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (r.parent[*it] >= 0) r.subtree_size[r.parent[*it]] += r.subtree_size[*it];

    r.edge_child.resize(t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const Edge& e = t.edges[i];
        r.edge_child[i] = (r.parent[e.second] == e.first) ? e.second : e.first;
    }
    return r;
}

int eccentricity(const Topology& t, int v) {
    auto adj = adjacency(t);
    std::vector<int> dist(t.n, -1);
    std::queue<int> q;
    q.push(v);
    dist[v] = 0;
    int far = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        far = std::max(far, dist[u]);
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return far;
}

std::vector<int> master_hub_candidates(const Topology& t) {
    std::vector<int> deg = degrees(t);
    for (int v = 0; v < t.n; ++v)
        if (deg[v] > kMaxOrdinaryDegree) return {v};

    if (t.n == 2) return {0, 1};

    std::vector<int> internal;
    for (int v = 0; v < t.n; ++v)
        if (deg[v] > 1) internal.push_back(v);

    std::vector<int> ecc(t.n, 0);
    for (int v : internal) ecc[v] = eccentricity(t, v);

    // rank positions are 1-based; ties go to the smaller id
    std::vector<int> by_deg = internal;
    std::stable_sort(by_deg.begin(), by_deg.end(),
                     [&](int a, int b) { return deg[a] < deg[b]; });
    std::vector<int> by_ecc = internal;
    std::stable_sort(by_ecc.begin(), by_ecc.end(),
                     [&](int a, int b) { return ecc[a] > ecc[b]; });

    std::vector<int> score(t.n, 0);
    for (std::size_t i = 0; i < by_deg.size(); ++i)
        score[by_deg[i]] += static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < by_ecc.size(); ++i)
        score[by_ecc[i]] += static_cast<int>(i) + 1;

    std::vector<int> sorted_scores;
    sorted_scores.reserve(internal.size());
    for (int v : internal) sorted_scores.push_back(score[v]);
    std::sort(sorted_scores.begin(), sorted_scores.end());
    int median = sorted_scores[(sorted_scores.size() - 1) / 2];  // lower median

    std::vector<int> out;
    for (int v : internal)
        if (score[v] >= median) out.push_back(v);
    return out;
}

}  // namespace netdesign
