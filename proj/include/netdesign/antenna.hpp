#pragma once

#include <unordered_map>
#include <vector>

#include "netdesign/core.hpp"
#include "netdesign/physics.hpp"

namespace netdesign {

// Chooses the cheapest beam pattern at `origin` that keeps every target
// within half the serving band's beamwidth of an active axis. Fewest beams
// first (fewer beams means more gain per beam), then the rotation that
// minimizes the worst angular deviation, then the smallest rotation. The
// rotation is canonicalized into [0, 2*pi/beams). Coverage uses the band's
// smaller beamwidth over its two frequencies, so the pattern is fixed
// before frequencies are picked. Throws if some target cannot be covered
// at all (possible only with very coarse beam lattices).
AntennaConfig configure_antenna(const Instance& inst, int origin,
                                const std::vector<int>& targets,
                                int channel);

// Memo for configure_antenna keyed by (origin, channel, target set).
// Pure-function cache: hits return the identical configuration. Bounded;
// clears itself wholesale if it ever outgrows max_entries.
class AntennaCache {
  public:
    explicit AntennaCache(const Instance& inst, std::size_t max_entries = 1u << 20)
        : inst_(&inst), max_entries_(max_entries) {}

    const AntennaConfig& get(int origin, const std::vector<int>& targets,
                             int channel);

    std::size_t size() const { return map_.size(); }

  private:
    const Instance* inst_;
    std::size_t max_entries_;
    std::unordered_map<std::string, AntennaConfig> map_;
};

}  // namespace netdesign
