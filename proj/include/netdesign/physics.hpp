#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace netdesign {

// One of the two frequency channels an antenna can operate on. Each band
// carries exactly two assignable frequencies; peak gain and beamwidth are
// properties of the band, not of the individual frequency.
struct ChannelBand {
    std::string label;        // "3+" or "4"
    double freq_lo_mhz = 0.0;
    double freq_hi_mhz = 0.0;
};

enum class PathLossModel { free_space };

// Extension seam for propagation: add an enum member and a branch in
// path_loss_db(); everything downstream consumes the dispatched value.
struct PhysicsParams {
    int beams_per_antenna = 24;
    double fade_margin_db = 0.0;
    std::array<ChannelBand, 2> bands{ChannelBand{"3+", 2000.0, 2400.0},
                                     ChannelBand{"4", 4500.0, 5000.0}};
    PathLossModel path_loss = PathLossModel::free_space;

    // Throws std::invalid_argument on malformed parameters.
    void validate() const;

    int channel_of(double freq_mhz) const;  // band index, throws if unknown
    double band_freq(int channel, int hi) const;
    double highest_freq_mhz() const;
};

// Active-beam pattern of one antenna: all beam axes sit on the lattice
// rotation_rad + b * 2*pi/beams_per_antenna for b in `beams`.
struct AntennaConfig {
    double rotation_rad = 0.0;
    std::vector<int> beams;  // sorted, unique, within [0, beams_per_antenna)
};

// Peak gain of one beam when `num_beams` beams share the power budget.
double g_max_db(int num_beams, double freq_mhz, const PhysicsParams& params);

// Half-power beamwidth of the band that owns freq_mhz, in radians.
double beamwidth_3db_rad(double freq_mhz, const PhysicsParams& params);

// Composite gain of a configured antenna toward `bearing`: per-beam gains
// roll off with the log-cosine of the axis deviation and add in linear
// space. Deviations of 90 degrees or more contribute nothing; if no beam
// contributes the result is -infinity.
double beam_gain_db(const AntennaConfig& antenna, double bearing_rad,
                    double freq_mhz, const PhysicsParams& params);

// Dispatches on params.path_loss. Throws on non-positive distance.
double path_loss_db(double distance_m, double freq_mhz,
                    const PhysicsParams& params);

// Received power over a link budget of 30 dBm transmit power.
inline double signal_strength_dbm(double gain_fwd_db, double gain_rev_db,
                                  double path_loss) {
    return 30.0 + gain_fwd_db + gain_rev_db - path_loss;
}

// Thermal noise over a 20 MHz channel with a 10 dB noise figure.
double noise_power_dbm();

double sinr_db(double signal_dbm, double interference_mw,
               double fade_margin_db);

// Step mapping from SINR to link rate; 0 below 2 dB, 78 Mbps from 29 dB up.
double throughput_mbps(double sinr_db);

inline constexpr double kLn10 = 2.30258509299404568402;

inline double db_to_linear(double db) { return std::exp(db * (0.1 * kLn10)); }

}  // namespace netdesign
