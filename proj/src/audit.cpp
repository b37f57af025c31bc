#include "netdesign/audit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "netdesign/geometry.hpp"

namespace netdesign {

namespace {

constexpr double kObjectiveTolerance = 1e-9;
constexpr double kCoverageSlack = 1e-9;  // radians, absorbs rounding only

void say(std::vector<std::string>* out, const std::string& msg) { out->push_back(msg); }

}  // namespace

std::vector<std::string> audit_design(const Instance& inst, const Design& design,
                                      const double* claimed_objective) {
    std::vector<std::string> out;
    const RootedTopology& rooted = design.rooted;
    const Topology& t = rooted.topology;
    const int n = inst.size();
    const PhysicsParams& ph = inst.physics;

    if (t.n != n) {
        say(&out, "topology node count does not match the instance");
        return out;
    }
    if (!is_valid_topology(t)) {
        say(&out, "topology is not a valid tree (connectivity or degree caps)");
        return out;
    }

    const std::vector<int> deg = degrees(t);
    const int hub = rooted.hub;
    if (hub < 0 || hub >= n) {
        say(&out, "hub id out of range");
        return out;
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] > kMaxOrdinaryDegree && v != hub) {
            std::ostringstream m;
            m << "vertex " << v << " has degree " << deg[v] << " but is not the hub";
            say(&out, m.str());
        }

    // Partition must split exactly the hub's neighbors, in bounded blocks.
    {
        std::set<int> seen;
        for (int x : design.partition.block_a) seen.insert(x);
        for (int x : design.partition.block_b) seen.insert(x);
        if (seen.size() !=
            design.partition.block_a.size() + design.partition.block_b.size())
            say(&out, "partition blocks overlap");
        std::set<int> nbrs;
        for (const Edge& e : t.edges) {
            if (e.first == hub) nbrs.insert(e.second);
            if (e.second == hub) nbrs.insert(e.first);
        }
        if (seen != nbrs) say(&out, "partition does not cover exactly the hub's neighbors");
        if (!partition_valid(design.partition)) say(&out, "partition block exceeds 10 nodes");
    }

    // Channels: hub blocks on distinct channels, every other edge on the
    // complement of its parent's uplink.
    const ChannelAssignment& ch = design.channels;
    if (static_cast<int>(ch.uplink_channel.size()) != n) {
        say(&out, "channel table size mismatch");
        return out;
    }
    if (ch.block_channel_a == ch.block_channel_b)
        say(&out, "hub blocks share a channel");
    if (ch.uplink_channel[hub] != -1) say(&out, "hub has an uplink channel");
    for (int v = 0; v < n; ++v) {
        if (v == hub) continue;
        const int par = rooted.parent[v];
        const int c = ch.uplink_channel[v];
        if (c != 0 && c != 1) {
            std::ostringstream m;
            m << "node " << v << " has no channel";
            say(&out, m.str());
            continue;
        }
        if (par == hub) {
            const auto& blk_a = design.partition.block_a;
            const bool in_a = std::binary_search(blk_a.begin(), blk_a.end(), v);
            const int want = in_a ? ch.block_channel_a : ch.block_channel_b;
            if (c != want) {
                std::ostringstream m;
                m << "hub edge to " << v << " is not on its block channel";
                say(&out, m.str());
            }
        } else if (c != 1 - ch.uplink_channel[par]) {
            std::ostringstream m;
            m << "edge to " << v << " does not alternate channels with depth";
            say(&out, m.str());
        }
    }

    // Frequencies: assigned, and members of the edge's channel band.
    if (design.freq_mhz.size() != t.edges.size()) {
        say(&out, "frequency table size mismatch");
        return out;
    }
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const double f = design.freq_mhz[e];
        const int c = ch.edge_channel(rooted, static_cast<int>(e));
        if (f != ph.band_freq(c, 0) && f != ph.band_freq(c, 1)) {
            std::ostringstream m;
            m << "edge " << e << " frequency " << f << " MHz is outside its channel";
            say(&out, m.str());
        }
    }

    // Antennas: a config exactly where a node serves links on a channel, and
    // every served link within half beamwidth of an active beam.
    if (static_cast<int>(design.antennas.size()) != 2 * n) {
        say(&out, "antenna table size mismatch");
        return out;
    }
    std::vector<std::vector<int>> served(static_cast<std::size_t>(2 * n));
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const int c = ch.edge_channel(rooted, static_cast<int>(e));
        const int child = rooted.edge_child[e];
        const Edge& ed = t.edges[e];
        const int par = ed.first == child ? ed.second : ed.first;
        served[antenna_slot(par, c)].push_back(child);
        served[antenna_slot(child, c)].push_back(par);
    }
    for (int slot = 0; slot < 2 * n; ++slot) {
        const auto& cfg = design.antennas[slot];
        if (served[slot].empty()) {
            if (cfg) {
                std::ostringstream m;
                m << "antenna slot " << slot << " configured but serves nothing";
                say(&out, m.str());
            }
            continue;
        }
        if (!cfg) {
            std::ostringstream m;
            m << "antenna slot " << slot << " serves links but has no configuration";
            say(&out, m.str());
            continue;
        }
        const int nb = ph.beams_per_antenna;
        bool beams_ok = !cfg->beams.empty();
        for (std::size_t i = 0; i < cfg->beams.size(); ++i) {
            if (cfg->beams[i] < 0 || cfg->beams[i] >= nb) beams_ok = false;
            if (i > 0 && cfg->beams[i] <= cfg->beams[i - 1]) beams_ok = false;
        }
        if (!beams_ok) {
            std::ostringstream m;
            m << "antenna slot " << slot << " has malformed beam indices";
            say(&out, m.str());
            continue;
        }
        const int origin = slot / 2;
        const int channel = slot & 1;
        const double half = std::min(beamwidth_3db_rad(ph.band_freq(channel, 0), ph),
                                     beamwidth_3db_rad(ph.band_freq(channel, 1), ph)) /
                            2.0;
        const double step = kTwoPi / nb;
        for (int target : served[slot]) {
            const double phi = inst.bearing(origin, target);
            double best = kTwoPi;
            for (int b : cfg->beams)
                best = std::min(best,
                                angular_difference(cfg->rotation_rad + b * step, phi));
            if (best > half + kCoverageSlack) {
                std::ostringstream m;
                m << "antenna slot " << slot << " leaves the link to " << target
                  << " outside half beamwidth";
                say(&out, m.str());
            }
        }
    }

    if (claimed_objective && out.empty()) {
        const double actual = evaluate_design(inst, design).breakdown.total;
        if (std::abs(actual - *claimed_objective) > kObjectiveTolerance) {
            std::ostringstream m;
            m << "claimed objective " << *claimed_objective
              << " disagrees with evaluation " << actual;
            say(&out, m.str());
        }
    }
    return out;
}

}  // namespace netdesign
