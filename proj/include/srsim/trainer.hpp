#pragma once

#include <span>
#include <string>
#include <vector>

#include "srsim/control.hpp"
#include "srsim/fuzzy.hpp"
#include "srsim/spectrum.hpp"

namespace srsim {

/// DC-removed torque ripple of a steady-state run, bin-averaged over the
/// stroke angle and tabulated against the window-mean PI reference.
struct RippleTable {
    struct Row {
        double theta_stroke = 0.0;  // bin center, [0, stroke) [rad]
        double iref_mean = 0.0;     // [A]
        double ripple = 0.0;        // binned torque minus mean [N m]
    };
    std::vector<Row> rows;
    int revolutions = 0;
    double mean_torque = 0.0;  // [N m]
    double iref_mean = 0.0;    // [A]
};

struct IterationRecord {
    int iteration = 0;          // 0 = uncompensated baseline
    double ptp_ripple = 0.0;    // [N m]
    double rms_ripple = 0.0;    // [N m]
    double h12_pct = 0.0;       // stroke harmonic, % of mean torque
    double mean_torque = 0.0;   // [N m]
    double iref_mean = 0.0;     // [A]
};

enum class StopReason { ripple_limit_reached, max_iterations, instability };

const char* to_string(StopReason reason);

struct TrainingReport {
    IterationRecord baseline;                 // metrics of the zero-compensator run
    std::vector<IterationRecord> iterations;  // k-th row: after k consequent updates
    StopReason termination = StopReason::max_iterations;
    // Iteration whose compensator train() returned: the one that met the
    // ripple limit, otherwise the best-achieved (lowest stroke harmonic).
    int selected_iteration = 0;
};

struct TrainerOptions {
    MfShape shape = MfShape::triangular;
    int max_iterations = 10;
    double ripple_limit_pct = 0.5;  // stop once h12 drops below this
    double gain = 0.0;              // A per N m of ripple; 0 = estimate from the model
    // Safety factor applied to the estimated gain. The estimate uses the
    // mid-pulse single-phase sensitivity; around commutation two phases
    // respond to the same reference, so a unit factor overshoots there.
    double gain_relaxation = 0.65;
    int bins_per_stroke = 64;
    int dc_removal_samples = 512;

    void validate() const;
};

/// Bin the steady-state torque of `trace` by stroke angle and remove the DC
/// component. Requires at least two complete revolutions after settle_time.
RippleTable extract_ripple_table(const MachineParams& machine, const SimulationTrace& trace,
                                 double settle_time, int bins_per_stroke = 64);

/// Torque ripple reinterpreted as current-correction targets on top of the
/// compensator's current output: target = f(theta, iref) - gain * ripple.
std::vector<TrainingSample> ripple_to_targets(const RippleTable& table,
                                              const FuzzyCompensator& fc, double gain);

/// Stroke-averaged compensator output at a fixed reference current,
/// midpoint-sampled over n uniform subintervals of the stroke.
double mean_compensation(const FuzzyCompensator& fc, double iref, int n_samples);

/// Shift all consequents so the compensator's mean over theta_samples at
/// iref_mean becomes zero (a constant consequent shift moves the output by
/// exactly that constant).
void remove_dc(FuzzyCompensator& fc, std::span<const double> theta_samples,
               double iref_mean);

/// 1 / (dT/di) secant estimate at the given current on the middle of the
/// rising-inductance ramp; the default error-to-current gain.
double estimate_torque_gain(const MachineParams& machine, double current);

/// Steady-state metrics of a closed-loop trace in report form (iteration 0):
/// ripple_metrics plus the window-mean PI output.
IterationRecord run_metrics(const DriveConfig& cfg, const SimulationTrace& trace);

struct IterationResult {
    FuzzyCompensator compensator;  // after the consequent update + DC removal
    IterationRecord record;        // metrics of the run driven by the INPUT compensator
};

/// One training pass: run the closed loop with `fc`, tabulate the ripple,
/// refit the consequents against the correction targets, remove the DC
/// component. The record reports the run it performed.
IterationResult train_iteration(const DriveConfig& cfg, const TrainerOptions& opts,
                                const FuzzyCompensator& fc);

struct TrainingResult {
    FuzzyCompensator compensator;
    TrainingReport report;
    std::vector<FuzzyCompensator> per_iteration;  // compensator after each update
};

/// Iterative compensation: baseline run, then update/evaluate cycles until
/// the stroke harmonic falls below ripple_limit_pct, max_iterations is
/// reached, or the ripple grows by more than 2x (instability; partial
/// report returned). Row k of the report measures the compensator after k
/// updates. When the limit is never met, the best-achieved iterate is
/// selected and returned (report.selected_iteration says which).
TrainingResult train(const DriveConfig& cfg, const TrainerOptions& opts,
                     const FuzzyCompensator* initial = nullptr);

}  // namespace srsim
