#pragma once

#include <cmath>

namespace srsim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

constexpr double rpm_to_rad_s(double rpm) { return rpm * kTwoPi / 60.0; }

/// Fold an angle into [0, period). Works for negative inputs.
inline double fold_angle(double theta, double period) {
    double r = std::fmod(theta, period);
    if (r < 0.0) r += period;
    // fmod can return exactly `period` only through the += above
    if (r >= period) r -= period;
    return r;
}

}  // namespace srsim
