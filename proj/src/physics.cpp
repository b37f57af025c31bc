#include "netdesign/physics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "netdesign/geometry.hpp"

namespace netdesign {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Band-level radiation constants: the 13 dB band is wider (60 deg), the
// 15 dB band narrower (50 deg).
double band_peak_gain_db(const std::string& label) {
    if (label == "3+") return 13.0;
    if (label == "4") return 15.0;
    throw std::invalid_argument("physics: unknown channel label '" + label + "'");
}

double band_beamwidth_rad(const std::string& label) {
    if (label == "3+") return 60.0 * kPi / 180.0;
    if (label == "4") return 50.0 * kPi / 180.0;
    throw std::invalid_argument("physics: unknown channel label '" + label + "'");
}

}  // namespace

void PhysicsParams::validate() const {
    if (beams_per_antenna < 1)
        throw std::invalid_argument("physics: beams_per_antenna must be >= 1");
    if (!(fade_margin_db >= 0.0) || !std::isfinite(fade_margin_db))
        throw std::invalid_argument("physics: fade_margin_db must be finite and >= 0");
    bool saw_low = false, saw_high = false;
    for (const ChannelBand& band : bands) {
        band_peak_gain_db(band.label);  // rejects unknown labels
        if (band.label == "3+") saw_low = true;
        if (band.label == "4") saw_high = true;
        if (!(band.freq_lo_mhz > 0.0) || !(band.freq_hi_mhz > 0.0))
            throw std::invalid_argument("physics: frequencies must be positive");
        if (!(band.freq_lo_mhz < band.freq_hi_mhz))
            throw std::invalid_argument("physics: band frequencies must be distinct (lo < hi)");
    }
    if (!saw_low || !saw_high)
        throw std::invalid_argument("physics: bands must be labeled \"3+\" and \"4\"");
    // the four frequencies must be distinguishable for assignment lookups
    double f[4] = {bands[0].freq_lo_mhz, bands[0].freq_hi_mhz,
                   bands[1].freq_lo_mhz, bands[1].freq_hi_mhz};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (f[i] == f[j])
                throw std::invalid_argument("physics: the four frequencies must be distinct");
}

int PhysicsParams::channel_of(double freq_mhz) const {
    for (int c = 0; c < 2; ++c)
        if (bands[c].freq_lo_mhz == freq_mhz || bands[c].freq_hi_mhz == freq_mhz)
            return c;
    throw std::invalid_argument("physics: frequency " + std::to_string(freq_mhz) +
                                " MHz is not in any band");
}

double PhysicsParams::band_freq(int channel, int hi) const {
    const ChannelBand& b = bands.at(channel);
    return hi ? b.freq_hi_mhz : b.freq_lo_mhz;
}

double PhysicsParams::highest_freq_mhz() const {
    double best = 0.0;
    for (const ChannelBand& b : bands) best = std::max(best, b.freq_hi_mhz);
    return best;
}

double g_max_db(int num_beams, double freq_mhz, const PhysicsParams& params) {
    if (num_beams < 1) throw std::invalid_argument("g_max_db: need at least one beam");
    int c = params.channel_of(freq_mhz);
    return band_peak_gain_db(params.bands[c].label) - 10.0 * std::log10(double(num_beams));
}

double beamwidth_3db_rad(double freq_mhz, const PhysicsParams& params) {
    int c = params.channel_of(freq_mhz);
    return band_beamwidth_rad(params.bands[c].label);
}

double beam_gain_db(const AntennaConfig& antenna, double bearing_rad,
                    double freq_mhz, const PhysicsParams& params) {
    if (antenna.beams.empty()) return kNegInf;
    const double gmax =
        g_max_db(static_cast<int>(antenna.beams.size()), freq_mhz, params);
    const double width = beamwidth_3db_rad(freq_mhz, params);
    // log-cosine rolloff normalized so the half-beamwidth point is -3 dB
    const double denom = std::log10(std::cos(width / 2.0));
    const double step = kTwoPi / params.beams_per_antenna;
    double sum_lin = 0.0;
    double last_g = kNegInf;
    int contributing = 0;
    for (int b : antenna.beams) {
        double dev = angular_difference(antenna.rotation_rad + b * step, bearing_rad);
        if (dev >= kPi / 2.0) continue;  // behind the half-plane: nothing radiated
        double cosd = std::cos(dev);
        if (cosd <= 0.0) continue;
        last_g = gmax - 3.0 * (std::log10(cosd) / denom);
        sum_lin += db_to_linear(last_g);
        ++contributing;
    }
    if (contributing == 0) return kNegInf;
    // a lone beam skips the linear round trip so peak values stay exact
    if (contributing == 1) return last_g;
    return 10.0 * std::log10(sum_lin);
}

double path_loss_db(double distance_m, double freq_mhz, const PhysicsParams& params) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("path_loss_db: distance must be positive");
    switch (params.path_loss) {
        case PathLossModel::free_space:
            return 20.0 * std::log10(distance_m / 1000.0) +
                   20.0 * std::log10(freq_mhz) + 32.44;
    }
    throw std::logic_error("path_loss_db: unhandled model");
}

double noise_power_dbm() {
    // -174 dBm/Hz floor over 20 MHz plus a 10 dB noise figure
    return -174.0 + 10.0 * std::log10(20.0e6) + 10.0;
}

double sinr_db(double signal_dbm, double interference_mw, double fade_margin_db) {
    double floor_mw = interference_mw + db_to_linear(noise_power_dbm());
    return signal_dbm - fade_margin_db - 10.0 * std::log10(floor_mw);
}

double throughput_mbps(double sinr) {
    static constexpr double kEdge[] = {2, 5, 9, 11, 15, 18, 20, 25, 29};
    static constexpr double kRate[] = {0, 6.5, 13, 19.5, 26, 39, 52, 58.5, 65, 78};
    int i = 0;
    while (i < 9 && sinr >= kEdge[i]) ++i;
    return kRate[i];
}

}  // namespace netdesign
