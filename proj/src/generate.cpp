#include "netdesign/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "netdesign/design.hpp"

namespace netdesign {

namespace {

constexpr double kMinSeparationM = 1.0;

// 53-bit mantissa uniform in [0, 1). Pinned here rather than relying on
// std::uniform_real_distribution, whose output is implementation-defined.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Instance generate_instance(const GeneratorOptions& opt) {
    if (opt.n < 2) throw std::invalid_argument("generate_instance: need n >= 2");
    if (!(opt.area_m > 0.0)) throw std::invalid_argument("generate_instance: bad area");

    Instance inst;
    inst.seed = opt.seed;
    std::mt19937_64 rng(opt.seed);

    while (inst.size() < opt.n) {
        bool placed = false;
        for (int attempt = 0; attempt < opt.max_attempts_per_node; ++attempt) {
            const double x = uniform01(rng) * opt.area_m;
            const double y = uniform01(rng) * opt.area_m;
            bool ok = true;
            for (const Node& other : inst.nodes) {
                const double d = std::hypot(x - other.x, y - other.y);
                if (d < kMinSeparationM || pair_unusable(inst.physics, d)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                inst.nodes.push_back({inst.size(), x, y});
                placed = true;
                break;
            }
        }
        if (!placed)
            throw std::runtime_error(
                "generate_instance: attempt budget exhausted; area too tight");
    }
    inst.validate();
    return inst;
}

}  // namespace netdesign
