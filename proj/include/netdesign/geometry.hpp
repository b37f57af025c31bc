#pragma once

#include <cmath>

namespace netdesign {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Normalizes an angle to [0, 2*pi).
inline double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

// Smallest absolute difference between two angles, in [0, pi].
inline double angular_difference(double a, double b) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return d > kPi ? kTwoPi - d : d;
}

// Compass-free bearing of (x1,y1) as seen from (x0,y0), in [0, 2*pi).
inline double bearing_rad(double x0, double y0, double x1, double y1) {
    return wrap_angle(std::atan2(y1 - y0, x1 - x0));
}

}  // namespace netdesign
