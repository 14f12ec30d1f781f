#pragma once

#include <array>

#include "srsim/angles.hpp"

namespace srsim {

/// Electrical and mechanical description of a 3-phase 6/4 switched
/// reluctance machine with an idealized trapezoidal inductance profile.
///
/// The inductance of one phase over a rotor pole pitch:
///
///   L(th) = Lu                          th in [0, rise_start)        (flat bottom tail)
///           Lu .. La linear ramp        th in [rise_start, flat_top_start)
///           La                          th in [flat_top_start, fall_start)
///           La .. Lu linear ramp        th in [fall_start, fall_end)
///           Lu                          th in [fall_end, pole_pitch)
///
/// The default rise ramp is 11 deg wider than the 30 deg stroke, so
/// consecutive phases share torque during commutation handover (pole-arc
/// overlap): the outgoing phase keeps producing torque on its ramp tail
/// while the incoming one is still slew-limited. Without that overlap the
/// handover torque dips are too sharp for any current waveshaping to
/// smooth.
struct MachineParams {
    int n_phases = 3;
    int n_rotor_poles = 4;

    double aligned_inductance = 72e-3;    // La [H]
    double unaligned_inductance = 16e-3;  // Lu [H]
    double phase_resistance = 1.3;        // [ohm]

    // Breakpoints of the trapezoid, radians within one pole pitch.
    double rise_start = 0.0;
    double flat_top_start = deg_to_rad(41.0);
    double fall_start = deg_to_rad(50.0);
    double fall_end = deg_to_rad(80.0);

    double inertia = 1.3e-3;           // J [kg m^2]
    double viscous_friction = 0.01;    // B [N m s/rad]
    double dc_link_voltage = 150.0;    // [V]

    double pole_pitch() const { return kTwoPi / n_rotor_poles; }
    double stroke_angle() const { return kTwoPi / (n_phases * n_rotor_poles); }
    int strokes_per_rev() const { return n_phases * n_rotor_poles; }

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

/// Instantaneous state. theta is unbounded mechanical angle; fold with
/// fold_angle(theta, pole_pitch) / phase_angle() where a folded value is needed.
struct MachineState {
    double theta = 0.0;                      // [rad], unbounded
    double omega = 0.0;                      // [rad/s]
    std::array<double, 3> phase_currents{};  // [A], unipolar (>= 0)
    double time = 0.0;                       // [s]
};

struct LoadSpec {
    double load_torque = 4.0;        // [N m], constant
    double target_speed_rpm = 500.0;

    double target_omega() const { return rpm_to_rad_s(target_speed_rpm); }
    void validate() const;
};

/// Rotor angle seen by phase k: theta shifted by k stroke angles, folded
/// into one pole pitch.
double phase_angle(const MachineParams& p, double theta, int k);

/// L(theta_phase). Folds internally, so it is total and exactly periodic.
double phase_inductance(const MachineParams& p, double theta_phase);

/// dL/dtheta at theta_phase (piecewise constant).
double phase_inductance_slope(const MachineParams& p, double theta_phase);

/// T = 1/2 i^2 dL/dtheta for the magnetically linear phase.
double phase_torque(const MachineParams& p, double theta_phase, double i);

/// Sum of the three phase torques at the machine state.
double total_torque(const MachineParams& p, const MachineState& s);

/// One fixed RK4 step of the electromechanical dynamics.
///
/// Integrated state is flux linkage per phase (lambda_k = L(theta_k) i_k),
/// rotor speed and angle:
///   dlambda_k/dt = v_k - R i_k
///   J domega/dt  = T_e - T_load - B omega
/// Currents are clamped at zero from below after the step (the converter
/// diodes cannot reverse phase current).
MachineState step_dynamics(const MachineParams& p, const MachineState& s,
                           const std::array<double, 3>& phase_voltages,
                           const LoadSpec& load, double dt);

}  // namespace srsim
