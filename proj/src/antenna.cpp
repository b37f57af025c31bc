#include "netdesign/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "netdesign/geometry.hpp"

namespace netdesign {

namespace {

constexpr double kEps = 1e-12;

// Circular run of beam indices that sit within `radius` of one bearing.
struct Run {
    int start = 0;  // lattice index, may be taken mod nb
    int len = 0;
};

double lattice_pos(double theta, double step, int b) { return theta + b * step; }

// Deviation of bearing phi from lattice axis index b (indices unbounded,
// reduced mod nb by the angle wrap itself).
double axis_dev(double theta, double step, int b, double phi) {
    return angular_difference(lattice_pos(theta, step, b), phi);
}

Run allowed_run(double theta, double step, int nb, double phi, double radius) {
    // nearest lattice index to phi
    int c = static_cast<int>(std::llround((phi - theta) / step));
    if (axis_dev(theta, step, c, phi) > radius + kEps) return {0, 0};
    int lo = c, hi = c;
    while (hi - lo + 1 < nb && axis_dev(theta, step, lo - 1, phi) <= radius + kEps) --lo;
    while (hi - lo + 1 < nb && axis_dev(theta, step, hi + 1, phi) <= radius + kEps) ++hi;
    return {lo, hi - lo + 1};
}

int mod_nb(int x, int nb) {
    int r = x % nb;
    return r < 0 ? r + nb : r;
}

bool run_contains(const Run& r, int pos, int nb) {
    int d = mod_nb(pos - r.start, nb);
    return d < r.len;
}

// Exact minimum stabbing of circular index runs: anchor on the tightest
// run, try each of its positions, finish greedily on the cut-open line.
// Returns the cover (empty means infeasible) with a deterministic choice.
std::vector<int> min_cover(double theta, double step, int nb,
                           const std::vector<double>& phis, double radius) {
    const int k = static_cast<int>(phis.size());
    std::vector<Run> runs(k);
    int anchor = -1;
    for (int t = 0; t < k; ++t) {
        runs[t] = allowed_run(theta, step, nb, phis[t], radius);
        if (runs[t].len == 0) return {};
        if (runs[t].len >= nb) runs[t] = {0, nb};
        if (anchor < 0 || runs[t].len < runs[anchor].len) anchor = t;
    }

    std::vector<int> best;
    for (int off = 0; off < runs[anchor].len; ++off) {
        int b0 = mod_nb(runs[anchor].start + off, nb);
        std::vector<std::pair<int, int>> rest;  // [a, b] on the line (b0, b0+nb)
        for (int t = 0; t < k; ++t) {
            if (run_contains(runs[t], b0, nb)) continue;
            int a = mod_nb(runs[t].start - b0, nb);  // in [1, nb-1]
            rest.emplace_back(a, a + runs[t].len - 1);
        }
        std::sort(rest.begin(), rest.end(),
                  [](const auto& x, const auto& y) { return x.second < y.second; });
        std::vector<int> chosen{b0};
        int stab = -1;
        for (const auto& [a, b] : rest) {
            if (stab >= a) continue;
            stab = b;
            chosen.push_back(mod_nb(b0 + stab, nb));
        }
        if (best.empty() || chosen.size() < best.size()) best = std::move(chosen);
    }
    std::sort(best.begin(), best.end());
    best.erase(std::unique(best.begin(), best.end()), best.end());
    return best;
}

}  // namespace

AntennaConfig configure_antenna(const Instance& inst, int origin,
                                const std::vector<int>& targets, int channel) {
    const PhysicsParams& params = inst.physics;
    if (targets.empty())
        throw std::invalid_argument("configure_antenna: no targets");
    const int nb = params.beams_per_antenna;
    const double step = kTwoPi / nb;
    const ChannelBand& band = params.bands.at(channel);
    const double halfw = std::min(beamwidth_3db_rad(band.freq_lo_mhz, params),
                                  beamwidth_3db_rad(band.freq_hi_mhz, params)) /
                         2.0;

    std::vector<double> phis;
    phis.reserve(targets.size());
    for (int t : targets) phis.push_back(inst.bearing(origin, t));

    auto wrap_step = [&](double a) {
        double r = std::fmod(a, step);
        if (r < 0.0) r += step;
        if (r >= step) r = 0.0;
        return r;
    };

    if (phis.size() == 1) {
        double theta = wrap_step(phis[0]);
        int b = mod_nb(static_cast<int>(std::llround((phis[0] - theta) / step)), nb);
        return {theta, {b}};
    }

    // Rotation candidates: target-on-axis points, balance points of target
    // pairs, and coverage-boundary points. The lattice repeats every
    // `step`, so candidates live in [0, step).
    std::vector<double> cands{0.0};
    for (double phi : phis) {
        cands.push_back(wrap_step(phi));
        cands.push_back(wrap_step(phi - halfw));
        cands.push_back(wrap_step(phi + halfw));
    }
    for (std::size_t i = 0; i < phis.size(); ++i)
        for (std::size_t j = i; j < phis.size(); ++j) {
            double m = std::fmod((phis[i] + phis[j]) / 2.0, step / 2.0);
            if (m < 0.0) m += step / 2.0;
            cands.push_back(m);
            cands.push_back(m + step / 2.0);
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](double a, double b) { return std::fabs(a - b) < kEps; }),
                cands.end());

    // Pass 1: fewest beams over all rotations.
    std::size_t best_m = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<int>> covers(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        covers[i] = min_cover(cands[i], step, nb, phis, halfw);
        if (!covers[i].empty()) best_m = std::min(best_m, covers[i].size());
    }
    if (best_m == std::numeric_limits<std::size_t>::max())
        throw std::invalid_argument(
            "configure_antenna: targets not coverable with this beam lattice");

    // Pass 2: among minimal-beam rotations, the smallest achievable worst
    // deviation; ties prefer the smaller rotation (ascending scan).
    double best_dev = std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    std::vector<int> best_beams;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (covers[i].empty() || covers[i].size() != best_m) continue;
        double theta = cands[i];
        // candidate deviations: every (target, admissible axis) distance
        std::vector<double> devs;
        for (double phi : phis) {
            Run r = allowed_run(theta, step, nb, phi, halfw);
            for (int off = 0; off < r.len; ++off)
                devs.push_back(axis_dev(theta, step, r.start + off, phi));
        }
        std::sort(devs.begin(), devs.end());
        devs.erase(std::unique(devs.begin(), devs.end(),
                               [](double a, double b) { return std::fabs(a - b) < kEps; }),
                   devs.end());
        // smallest radius keeping the cover at best_m beams
        std::size_t lo = 0, hi = devs.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            std::vector<int> c = min_cover(theta, step, nb, phis, devs[mid]);
            if (!c.empty() && c.size() <= best_m) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        std::vector<int> cover = min_cover(theta, step, nb, phis, devs[lo]);
        if (cover.empty() || cover.size() > best_m) continue;
        if (devs[lo] < best_dev - kEps) {
            best_dev = devs[lo];
            best_theta = theta;
            best_beams = std::move(cover);
        }
    }

    return {best_theta, best_beams};
}

const AntennaConfig& AntennaCache::get(int origin, const std::vector<int>& targets,
                                       int channel) {
    std::string key;
    key.reserve(4 + 2 * targets.size());
    auto put16 = [&key](int v) {
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    put16(origin);
    put16(channel);
    for (int t : targets) put16(t);

    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    if (map_.size() >= max_entries_) map_.clear();
    AntennaConfig cfg = configure_antenna(*inst_, origin, targets, channel);
    return map_.emplace(std::move(key), std::move(cfg)).first->second;
}

}  // namespace netdesign
