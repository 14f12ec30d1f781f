#pragma once

#include <vector>

#include "srsim/control.hpp"

namespace srsim {

/// Torque resampled uniformly in ANGLE over an integer number of mechanical
/// revolutions (the last complete ones after settle_time). Angle-domain
/// sampling makes harmonic orders exact despite residual speed ripple.
struct AngleResampled {
    int samples_per_rev = 0;
    int revolutions = 0;
    double mean = 0.0;
    std::vector<double> torque;  // revolutions * samples_per_rev values
};

AngleResampled resample_torque_by_angle(const SimulationTrace& trace, double settle_time,
                                        int samples_per_rev = 4096, int max_revolutions = 0);

/// Harmonic magnitudes of the steady-state torque, order n = cycles per
/// mechanical revolution, expressed as percent of the mean torque.
struct HarmonicSpectrum {
    double mean_torque = 0.0;
    std::vector<double> magnitude_pct;  // magnitude_pct[n-1] <-> order n

    int max_order() const { return static_cast<int>(magnitude_pct.size()); }
    double at(int order) const;  // throws on out-of-range order
};

HarmonicSpectrum torque_spectrum(const SimulationTrace& trace, double settle_time,
                                 int n_orders = 96, int samples_per_rev = 4096,
                                 int max_revolutions = 0);

struct RippleMetrics {
    double peak_to_peak = 0.0;  // [N m]
    double rms_ripple = 0.0;    // [N m]
    double h12_pct = 0.0;       // stroke-frequency harmonic, % of mean
    double mean_torque = 0.0;   // [N m]
};

/// Scalar ripple summaries over the same steady window as torque_spectrum.
/// stroke_order is the first ripple order (strokes per revolution, 12 here).
RippleMetrics ripple_metrics(const SimulationTrace& trace, double settle_time,
                             int stroke_order = 12, int samples_per_rev = 4096);

}  // namespace srsim
