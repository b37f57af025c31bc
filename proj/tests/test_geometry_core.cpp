#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "netdesign/core.hpp"

using namespace netdesign;

TEST_CASE("angle wrapping and differences") {
    CHECK(wrap_angle(kTwoPi) == doctest::Approx(0.0));
    CHECK(wrap_angle(-kPi / 2) == doctest::Approx(1.5 * kPi));
    CHECK(wrap_angle(7.0 * kPi) == doctest::Approx(kPi));
    CHECK(angular_difference(0.1, kTwoPi - 0.1) == doctest::Approx(0.2));
    CHECK(angular_difference(3.0, 0.5) == angular_difference(0.5, 3.0));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double d = angular_difference(u(rng), u(rng));
        CHECK(d >= 0.0);
        CHECK(d <= kPi + 1e-12);
    }
}

TEST_CASE("bearings follow atan2 conventions") {
    CHECK(bearing_rad(0, 0, 1, 0) == doctest::Approx(0.0));
    CHECK(bearing_rad(0, 0, 0, 1) == doctest::Approx(kPi / 2));
    CHECK(bearing_rad(0, 0, -1, 0) == doctest::Approx(kPi));
    CHECK(bearing_rad(0, 0, 0, -1) == doctest::Approx(1.5 * kPi));
}

TEST_CASE("edges normalize and topologies sort") {
    CHECK(make_edge(4, 2) == Edge{2, 4});
    Topology t = topology_from_edges(4, {{3, 2}, {1, 0}, {2, 1}});
    CHECK(t.edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(t.has_edge({1, 2}));
    CHECK(!t.has_edge({0, 3}));
    CHECK(degrees(t) == std::vector<int>{1, 2, 2, 1});
    CHECK(adjacency(t)[1] == std::vector<int>{0, 2});
}

TEST_CASE("topology validity rules") {
    // path
    CHECK(is_valid_topology(topology_from_edges(4, {{0, 1}, {1, 2}, {2, 3}})));
    // one vertex above degree 11 is allowed up to 20
    std::vector<Edge> star;
    for (int v = 1; v <= 12; ++v) star.push_back({0, v});
    CHECK(is_valid_topology(topology_from_edges(13, star)));
    std::vector<Edge> wide;
    for (int v = 1; v <= 21; ++v) wide.push_back({0, v});
    CHECK(!is_valid_topology(topology_from_edges(22, wide)));  // degree 21
    // two vertices above 11 are not
    std::vector<Edge> twin;
    for (int v = 2; v <= 13; ++v) twin.push_back({0, v});
    for (int v = 14; v <= 25; ++v) twin.push_back({1, v});
    twin.push_back({0, 1});
    CHECK(!is_valid_topology(topology_from_edges(26, twin)));
    // cycle plus isolated vertex has n-1 edges but is not spanning
    CHECK(!is_valid_topology(topology_from_edges(4, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(!is_valid_topology(topology_from_edges(4, {{0, 1}, {1, 2}})));
}

TEST_CASE("rooting computes parents, depths and subtree sizes") {
    // node 2 fans out to 0, 3, 4; node 1 hangs off 3
    Topology t = topology_from_edges(5, {{0, 2}, {2, 3}, {2, 4}, {1, 3}});
    RootedTopology r = root_at(t, 2);
    CHECK(r.hub == 2);
    CHECK(r.parent == std::vector<int>{2, 3, -1, 2, 2});
    CHECK(r.children[2] == std::vector<int>{0, 3, 4});
    CHECK(r.depth == std::vector<int>{1, 2, 0, 1, 1});
    CHECK(r.subtree_size == std::vector<int>{1, 1, 5, 2, 1});
    // edge_child is the endpoint farther from the hub
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const int c = r.edge_child[i];
        const int p = c == t.edges[i].first ? t.edges[i].second : t.edges[i].first;
        CHECK(r.parent[c] == p);
    }
}

TEST_CASE("rooting rejects a misplaced hub") {
    std::vector<Edge> star;
    for (int v = 1; v <= 12; ++v) star.push_back({0, v});
    star.push_back({12, 13});
    Topology t = topology_from_edges(14, star);
    CHECK_NOTHROW(root_at(t, 0));
    CHECK_THROWS_AS(root_at(t, 13), std::invalid_argument);
}

TEST_CASE("subtree sizes match depth sums on random trees") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 25; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 8);
        Topology t = testutil::random_tree(n, rng);
        REQUIRE(is_valid_topology(t));
        RootedTopology r = root_at(t, static_cast<int>(rng() % n));
        long sizes = 0, depths = 0;
        for (int v = 0; v < n; ++v) {
            sizes += r.subtree_size[v];
            depths += r.depth[v] + 1;
        }
        CHECK(sizes == depths);
    }
}

TEST_CASE("eccentricity of path endpoints") {
    Topology t = topology_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(eccentricity(t, 0) == 4);
    CHECK(eccentricity(t, 2) == 2);
}

TEST_CASE("hub candidates") {
    // the unique high-degree vertex is forced
    std::vector<Edge> star;
    for (int v = 1; v <= 12; ++v) star.push_back({0, v});
    CHECK(master_hub_candidates(topology_from_edges(13, star)) == std::vector<int>{0});
    // two nodes: either one
    CHECK(master_hub_candidates(topology_from_edges(2, {{0, 1}})) ==
          std::vector<int>{0, 1});
    // path of five: the center makes the cut, the ends never do
    Topology path = topology_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const auto cands = master_hub_candidates(path);
    CHECK(std::find(cands.begin(), cands.end(), 2) != cands.end());
    for (int leaf : {0, 4})
        CHECK(std::find(cands.begin(), cands.end(), leaf) == cands.end());
}
