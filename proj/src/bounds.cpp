#include "netdesign/bounds.hpp"

namespace netdesign {

namespace {

// Evaluates one (rooted tree, partition, polarity) candidate with greedy
// frequencies and folds it into the running best. Strict improvement only,
// so earlier candidates win ties.
void fold_candidate(BoundContext& ctx, const RootedTopology& rooted,
                    const Partition& partition, bool flip, bool* have,
                    BoundResult* best) {
    const Instance& inst = *ctx.instance;
    ChannelAssignment channels = assign_channels(rooted, partition, flip);
    auto antennas = build_antennas(inst, rooted, partition, channels, ctx.cache);
    ctx.eval.bind(rooted, channels, antennas);
    FrequencyResult fr = greedy_frequency_assignment(ctx.eval, ctx.mode);
    if (!*have || fr.objective > best->value) {
        *have = true;
        best->value = fr.objective;
        best->breakdown = fr.breakdown;
        best->design.rooted = rooted;
        best->design.partition = partition;
        best->design.channels = std::move(channels);
        best->design.freq_mhz = std::move(fr.freq_mhz);
        best->design.antennas = std::move(antennas);
    }
}

}  // namespace

BoundResult lb1(BoundContext& ctx, const Topology& t) {
    const Instance& inst = *ctx.instance;
    BoundResult best;
    bool have = false;
    for (int hub : master_hub_candidates(t)) {
        RootedTopology rooted = root_at(t, hub);
        for (const Partition& partition : enumerate_partitions(inst, rooted))
            for (int flip = 0; flip < 2; ++flip)
                fold_candidate(ctx, rooted, partition, flip != 0, &have, &best);
    }
    return best;
}

BoundResult lb2(BoundContext& ctx, const Topology& t, int hub,
                const Partition& partition) {
    BoundResult best;
    bool have = false;
    RootedTopology rooted = root_at(t, hub);
    for (int flip = 0; flip < 2; ++flip)
        fold_candidate(ctx, rooted, partition, flip != 0, &have, &best);
    return best;
}

}  // namespace netdesign
