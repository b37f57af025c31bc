#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "netdesign/frequency.hpp"

using namespace netdesign;

namespace {

struct Bound {
    Design design;
    Evaluator eval;
    Bound(const Instance& inst, const Topology& t, int hub) : eval(inst) {
        design.rooted = root_at(t, hub);
        design.partition = enumerate_partitions(inst, design.rooted).front();
        design.channels = assign_channels(design.rooted, design.partition, false);
        AntennaCache cache(inst);
        design.antennas =
            build_antennas(inst, design.rooted, design.partition, design.channels, cache);
        design.freq_mhz.assign(t.edges.size(), 0.0);
        eval.bind(design.rooted, design.channels, design.antennas);
    }
};

// Exhaustive maximum recomputed through the from-scratch evaluator: every
// decision combination is written into a Design and re-scored cold.
double brute_force_best(const Instance& inst, Bound& b, FrequencyMode mode) {
    const auto& groups = b.eval.groups();
    std::vector<std::pair<int, int>> decisions;  // (channel, edge) per step
    for (const auto& g : groups) {
        if (mode == FrequencyMode::grouped) {
            decisions.emplace_back(g.channel, -1);
        } else {
            for (int e : g.edges) decisions.emplace_back(g.channel, e);
        }
    }
    const int k = static_cast<int>(decisions.size());
    REQUIRE(k <= 16);
    double best = -1.0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Design d = b.design;
        int step = 0;
        for (const auto& g : groups) {
            if (mode == FrequencyMode::grouped) {
                const double f = inst.physics.band_freq(g.channel, (mask >> step) & 1u);
                for (int e : g.edges) d.freq_mhz[e] = f;
                ++step;
            } else {
                for (int e : g.edges) {
                    d.freq_mhz[e] =
                        inst.physics.band_freq(g.channel, (mask >> step) & 1u);
                    ++step;
                }
            }
        }
        best = std::max(best, evaluate_design(inst, d).breakdown.total);
    }
    return best;
}

Instance random_instance(int n, std::mt19937_64& rng, double span_m = 50000.0) {
    std::uniform_real_distribution<double> coord(0.0, span_m);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(coord(rng), coord(rng));
    return testutil::instance_at(pts);
}

}  // namespace

TEST_CASE("the oracle equals a cold-scored enumeration") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 4 + static_cast<int>(rng() % 3);
        Instance inst = random_instance(n, rng);
        Topology t = testutil::random_tree(n, rng);
        const int hub = master_hub_candidates(t).front();
        for (FrequencyMode mode : {FrequencyMode::grouped, FrequencyMode::per_edge}) {
            Bound b(inst, t, hub);
            const double want = brute_force_best(inst, b, mode);
            const FrequencyResult fr = exhaustive_frequency_oracle(b.eval, mode);
            CHECK(std::fabs(fr.objective - want) < 1e-9);
        }
    }
}

TEST_CASE("greedy never beats the oracle") {
    std::mt19937_64 rng(202);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 4 + static_cast<int>(rng() % 5);
        Instance inst = random_instance(n, rng);
        Topology t = testutil::random_tree(n, rng);
        const int hub = master_hub_candidates(t).front();
        for (FrequencyMode mode : {FrequencyMode::grouped, FrequencyMode::per_edge}) {
            Bound b(inst, t, hub);
            const FrequencyResult greedy = greedy_frequency_assignment(b.eval, mode);
            b.eval.reset_assignment();
            const FrequencyResult oracle = exhaustive_frequency_oracle(b.eval, mode);
            CHECK(greedy.objective <= oracle.objective + 1e-12);
            CHECK(greedy.decision_steps == oracle.decision_steps);
        }
    }
}

TEST_CASE("single decisions are solved optimally, ties keep the higher frequency") {
    Instance inst = testutil::instance_at({{0, 0}, {1500, 900}});
    Topology t = topology_from_edges(2, {{0, 1}});
    Bound b(inst, t, 0);
    const FrequencyResult fr = greedy_frequency_assignment(b.eval);
    REQUIRE(fr.freq_mhz.size() == 1);
    CHECK(fr.decision_steps == 1);
    // 1.75 km: both candidate frequencies saturate the rate table, so the
    // choice is a pure tie and the higher one stays
    const int c = b.design.channels.edge_channel(b.design.rooted, 0);
    CHECK(fr.freq_mhz[0] == inst.physics.band_freq(c, 1));
    b.eval.reset_assignment();
    const FrequencyResult oracle = exhaustive_frequency_oracle(b.eval);
    CHECK(fr.objective == oracle.objective);
}

TEST_CASE("decision counts follow the mode") {
    // hub 0 with children 1,2,3; 1 has children 4,5
    Instance inst = testutil::ring_instance(6, 10000.0);
    Topology t = topology_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    Bound b(inst, t, 0);
    const std::size_t m = t.edges.size();
    std::size_t grouped_steps = b.eval.groups().size();
    const FrequencyResult g = greedy_frequency_assignment(b.eval, FrequencyMode::grouped);
    CHECK(g.decision_steps == static_cast<int>(grouped_steps));
    b.eval.reset_assignment();
    const FrequencyResult p = greedy_frequency_assignment(b.eval, FrequencyMode::per_edge);
    CHECK(p.decision_steps == static_cast<int>(m));
    // per-edge relaxes grouped: its optimum can only be better
    b.eval.reset_assignment();
    const FrequencyResult og = exhaustive_frequency_oracle(b.eval, FrequencyMode::grouped);
    b.eval.reset_assignment();
    const FrequencyResult op = exhaustive_frequency_oracle(b.eval, FrequencyMode::per_edge);
    CHECK(op.objective >= og.objective - 1e-12);
}

TEST_CASE("assignments stay inside the edge's band") {
    std::mt19937_64 rng(303);
    Instance inst = random_instance(6, rng);
    Topology t = testutil::random_tree(6, rng);
    Bound b(inst, t, master_hub_candidates(t).front());
    const FrequencyResult fr = greedy_frequency_assignment(b.eval);
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const int c = b.design.channels.edge_channel(b.design.rooted, static_cast<int>(e));
        const bool lo = fr.freq_mhz[e] == inst.physics.band_freq(c, 0);
        const bool hi = fr.freq_mhz[e] == inst.physics.band_freq(c, 1);
        CHECK((lo || hi));
        CHECK(b.eval.edge_freq_mhz(static_cast<int>(e)) == fr.freq_mhz[e]);
    }
    CHECK(b.eval.fully_assigned());
}

TEST_CASE("two-step designs are still solved to optimality") {
    std::mt19937_64 rng(404);
    int tested = 0;
    while (tested < 10) {
        const int n = 4 + static_cast<int>(rng() % 3);
        Instance inst = random_instance(n, rng);
        Topology t = testutil::random_tree(n, rng);
        Bound b(inst, t, master_hub_candidates(t).front());
        if (b.eval.groups().size() != 2) continue;
        ++tested;
        const FrequencyResult greedy = greedy_frequency_assignment(b.eval);
        b.eval.reset_assignment();
        const FrequencyResult oracle = exhaustive_frequency_oracle(b.eval);
        CHECK(greedy.objective == doctest::Approx(oracle.objective).epsilon(1e-12));
    }
}
