#include "netdesign/design.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "netdesign/geometry.hpp"
#include "netdesign/objective.hpp"

namespace netdesign {

bool partition_valid(const Partition& p) {
    if (p.block_a.size() > static_cast<std::size_t>(kMaxBlockSize)) return false;
    if (p.block_b.size() > static_cast<std::size_t>(kMaxBlockSize)) return false;
    std::set<int> all(p.block_a.begin(), p.block_a.end());
    all.insert(p.block_b.begin(), p.block_b.end());
    return all.size() == p.block_a.size() + p.block_b.size();
}

std::vector<Partition> enumerate_partitions(const Instance& inst,
                                            const RootedTopology& rooted) {
    const int hub = rooted.hub;
    std::vector<int> nbrs = rooted.children[hub];  // hub has no parent
    const int d = static_cast<int>(nbrs.size());
    if (d > kMaxHubDegree)
        throw std::invalid_argument("enumerate_partitions: hub degree exceeds 20");

    // circular order by bearing from the hub; ties by id keep it stable
    std::stable_sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
        return inst.bearing(hub, a) < inst.bearing(hub, b);
    });

    // canonical form: the block holding the smallest id first, empty last
    auto canon = [](std::vector<int> x, std::vector<int> y) {
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x.empty() || (!y.empty() && y.front() < x.front())) std::swap(x, y);
        return std::make_pair(std::move(x), std::move(y));
    };

    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    const int x_lo = std::max(0, d - kMaxBlockSize);
    const int x_hi = std::min(kMaxBlockSize, d);
    for (int x = x_lo; x <= x_hi; ++x) {
        for (int s = 0; s < d; ++s) {
            std::vector<int> block;
            block.reserve(x);
            for (int i = 0; i < x; ++i) block.push_back(nbrs[(s + i) % d]);
            std::vector<int> rest;
            rest.reserve(d - x);
            for (int i = x; i < d; ++i) rest.push_back(nbrs[(s + i) % d]);
            seen.insert(canon(std::move(block), std::move(rest)));
            if (x == 0) break;  // all rotations of the empty block coincide
        }
    }

    std::vector<Partition> out;
    out.reserve(seen.size());
    for (const auto& [a, b] : seen) out.push_back(Partition{a, b});
    return out;
}

ChannelAssignment assign_channels(const RootedTopology& rooted,
                                  const Partition& partition, bool flip) {
    const int n = rooted.topology.n;
    ChannelAssignment ca;
    ca.block_channel_a = flip ? 1 : 0;
    ca.block_channel_b = flip ? 0 : 1;
    ca.uplink_channel.assign(n, -1);
    for (int v : partition.block_a) ca.uplink_channel[v] = ca.block_channel_a;
    for (int v : partition.block_b) ca.uplink_channel[v] = ca.block_channel_b;
    // below the hub the channel alternates level by level
    std::queue<int> q;
    for (int v : rooted.children[rooted.hub]) q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : rooted.children[u]) {
            ca.uplink_channel[w] = 1 - ca.uplink_channel[u];
            q.push(w);
        }
    }
    return ca;
}

std::optional<Partition> repair_partition(const Instance& inst, int hub,
                                          const Partition& partition,
                                          const Edge& removed, const Edge& added) {
    Partition p = partition;
    auto drop = [](std::vector<int>& blk, int v) {
        auto it = std::find(blk.begin(), blk.end(), v);
        if (it == blk.end()) return false;
        blk.erase(it);
        return true;
    };
    if (removed.first == hub || removed.second == hub) {
        int gone = removed.first == hub ? removed.second : removed.first;
        if (!drop(p.block_a, gone)) drop(p.block_b, gone);
    }
    if (added.first == hub || added.second == hub) {
        int v = added.first == hub ? added.second : added.first;
        double vb = inst.bearing(hub, v);
        int nearest = -1;
        double best = 0.0;
        bool in_a = true;
        auto scan = [&](const std::vector<int>& blk, bool is_a) {
            for (int w : blk) {
                double d = angular_difference(inst.bearing(hub, w), vb);
                if (nearest < 0 || d < best || (d == best && w < nearest)) {
                    nearest = w;
                    best = d;
                    in_a = is_a;
                }
            }
        };
        scan(p.block_a, true);
        scan(p.block_b, false);
        std::vector<int>& target = (nearest < 0 || in_a) ? p.block_a : p.block_b;
        target.insert(std::upper_bound(target.begin(), target.end(), v), v);
    }
    if (p.block_a.size() > static_cast<std::size_t>(kMaxBlockSize) ||
        p.block_b.size() > static_cast<std::size_t>(kMaxBlockSize))
        return std::nullopt;
    return p;
}

bool pair_unusable(const PhysicsParams& ph, double distance_m) {
    const double f = ph.highest_freq_mhz();
    const double peak = g_max_db(1, f, ph);
    const double s = signal_strength_dbm(peak, peak, path_loss_db(distance_m, f, ph));
    return throughput_mbps(sinr_db(s, 0.0, ph.fade_margin_db)) == 0.0;
}

std::vector<char> compute_e_not(const Instance& inst) {
    const int n = inst.size();
    std::vector<char> out(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pair_unusable(inst.physics, inst.distance_m(u, v))) {
                out[static_cast<std::size_t>(u) * n + v] = 1;
                out[static_cast<std::size_t>(v) * n + u] = 1;
            }
    return out;
}

std::vector<std::optional<AntennaConfig>> build_antennas(
    const Instance& inst, const RootedTopology& rooted, const Partition& partition,
    const ChannelAssignment& channels, AntennaCache& cache) {
    const int n = rooted.topology.n;
    std::vector<std::optional<AntennaConfig>> out(2 * static_cast<std::size_t>(n));
    if (!partition.block_a.empty())
        out[antenna_slot(rooted.hub, channels.block_channel_a)] =
            cache.get(rooted.hub, partition.block_a, channels.block_channel_a);
    if (!partition.block_b.empty())
        out[antenna_slot(rooted.hub, channels.block_channel_b)] =
            cache.get(rooted.hub, partition.block_b, channels.block_channel_b);
    for (int v = 0; v < n; ++v) {
        if (v == rooted.hub) continue;
        int up = channels.uplink_channel[v];
        out[antenna_slot(v, up)] = cache.get(v, {rooted.parent[v]}, up);
        if (!rooted.children[v].empty())
            out[antenna_slot(v, 1 - up)] = cache.get(v, rooted.children[v], 1 - up);
    }
    return out;
}

}  // namespace netdesign
