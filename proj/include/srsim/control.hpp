#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "srsim/fuzzy.hpp"
#include "srsim/machine.hpp"

namespace srsim {

/// Firing angles, radians within one pole pitch. The conduction interval
/// must sit inside the rising-inductance ramp (motoring). The default
/// window spans exactly one stroke, so the activation intervals of the
/// three phases tile the revolution: every rotor angle has one active
/// phase and the compensator has torque authority everywhere. Turn-on
/// sits 4 deg into the ramp: each pulse then covers the following
/// stroke's build-up interval, where the hand-over torque deficit lives.
struct CommutationSpec {
    double turn_on = deg_to_rad(4.0);
    double turn_off = deg_to_rad(34.0);

    void validate(const MachineParams& p) const;
};

/// Speed PI with output clamping and conditional integration: the
/// integrator holds its previous value whenever the output saturates.
/// kp is kept small enough that stroke-frequency speed ripple does not
/// drive the output onto its clamp, which would bias the integrator.
struct PiController {
    double kp = 0.2;          // [A s/rad]
    double ki = 4.0;          // [A/rad]
    double integrator = 0.0;  // [rad] accumulated error*dt
    double out_min = 0.0;     // [A]
    double out_max = 12.0;    // [A]

    void validate() const;
};

struct HysteresisSpec {
    double band = 0.1;  // half-width [A]

    void validate() const;
};

/// Phase k is active iff its folded, stroke-shifted angle lies in
/// [turn_on, turn_off). With the default geometry this yields 12
/// activations per mechanical revolution.
std::array<bool, 3> active_phases(const MachineParams& p, const CommutationSpec& comm,
                                  double theta);

struct HysteresisDecision {
    double voltage = 0.0;    // applied phase voltage: +Vdc, 0 or -Vdc
    bool conducting = false; // next switch state
};

/// Hard-chopping hysteresis regulator for one phase of the asymmetric
/// half-bridge. Inactive phases are forced to demagnetize (-Vdc while
/// current remains, 0 afterwards).
HysteresisDecision hysteresis_voltage(const HysteresisSpec& spec, double v_dc,
                                      double i_ref, double i, bool active,
                                      bool prev_conducting);

/// One PI update; returns the current reference and advances the
/// controller state. Rejects non-finite errors.
double pi_step(PiController& ctrl, double speed_error, double dt);

/// I_comp = max(0, I_ref + Delta I_comp); the drive is unipolar.
double compose_reference(double i_ref, double delta_comp);

/// Everything one closed-loop run needs.
struct DriveConfig {
    MachineParams machine;
    CommutationSpec commutation;
    PiController pi;
    HysteresisSpec hysteresis;
    LoadSpec load;

    double dt = 1e-5;          // integration step [s]
    double settle_time = 1.0;  // discarded before steady-state analysis [s]
    double duration = 1.5;     // total simulated time [s]
    int trace_decimation = 1;

    void validate() const;
};

/// Time series sampled every trace_decimation steps, columns matching the
/// exported CSV schema.
struct SimulationTrace {
    double dt_sample = 0.0;
    std::vector<double> time;
    std::vector<double> theta;   // unbounded mechanical angle
    std::vector<double> omega;
    std::vector<double> iref;    // PI output
    std::vector<double> dicomp;  // compensator output
    std::vector<std::array<double, 3>> currents;
    std::vector<double> torque;

    std::size_t size() const { return time.size(); }
};

/// Full drive loop: speed PI -> optional fuzzy compensation at
/// (stroke-folded theta, I_ref) -> per-phase hysteresis control -> machine
/// step. Deterministic; throws NumericError with the offending timestamp
/// if the state leaves the finite domain.
SimulationTrace run_closed_loop(const DriveConfig& cfg,
                                const FuzzyCompensator* compensator = nullptr);

}  // namespace srsim
