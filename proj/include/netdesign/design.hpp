#pragma once

#include <optional>
#include <vector>

#include "netdesign/antenna.hpp"
#include "netdesign/core.hpp"

namespace netdesign {

// Split of the hub's neighbors across its two antennas. A block may be
// empty; both are sorted ascending.
struct Partition {
    std::vector<int> block_a;
    std::vector<int> block_b;
};

bool partition_valid(const Partition& p);

// Per-node channel of the uplink toward the parent (-1 at the hub) plus the
// channel each hub block transmits on. Channels alternate with depth.
struct ChannelAssignment {
    std::vector<int> uplink_channel;
    int block_channel_a = 0;
    int block_channel_b = 1;

    int edge_channel(const RootedTopology& rooted, int edge_idx) const {
        return uplink_channel[rooted.edge_child[edge_idx]];
    }
};

// All angularly consecutive 2-block splits of the hub's neighbors (blocks
// capped at 10), deduplicated as unordered pairs and emitted in a stable
// canonical order. Sizes: d(d-1)/2+1 for d <= 10, d(21-d)/2 for d in
// [11, 20].
std::vector<Partition> enumerate_partitions(const Instance& inst,
                                            const RootedTopology& rooted);

// flip swaps which physical channel serves which block; everything below
// the hub alternates accordingly, so flipping complements every edge.
ChannelAssignment assign_channels(const RootedTopology& rooted,
                                  const Partition& partition, bool flip);

// Rebuilds the hub partition after an edge swap: a dropped hub neighbor
// leaves its block, a new hub neighbor joins the block of the angularly
// nearest surviving neighbor. Returns nullopt if a block would exceed 10.
std::optional<Partition> repair_partition(const Instance& inst, int hub,
                                          const Partition& partition,
                                          const Edge& removed,
                                          const Edge& added);

// True when a pair this far apart cannot carry a link even under the most
// favorable setup: single beam, perfect alignment on both ends, the highest
// frequency, no interference.
bool pair_unusable(const PhysicsParams& ph, double distance_m);

// Symmetric n*n unusable-pair matrix, flattened row-major.
std::vector<char> compute_e_not(const Instance& inst);

inline bool e_not_contains(const std::vector<char>& e_not, int n, int u, int v) {
    return e_not[static_cast<std::size_t>(u) * n + v] != 0;
}

// Complete deployable configuration. antennas is indexed by 2*node+channel
// and holds a config exactly where that node has links on that channel.
struct Design {
    RootedTopology rooted;
    Partition partition;
    ChannelAssignment channels;
    std::vector<double> freq_mhz;  // per edge index; 0 = unassigned
    std::vector<std::optional<AntennaConfig>> antennas;
};

inline int antenna_slot(int node, int channel) { return 2 * node + channel; }

// Builds the antenna table for (rooted, partition, channels) through the
// cache: hub blocks on their block channels, every other node's uplink on
// its uplink channel and downlinks on the opposite one.
std::vector<std::optional<AntennaConfig>> build_antennas(
    const Instance& inst, const RootedTopology& rooted,
    const Partition& partition, const ChannelAssignment& channels,
    AntennaCache& cache);

}  // namespace netdesign
