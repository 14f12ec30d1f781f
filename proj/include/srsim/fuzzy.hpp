#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srsim {

enum class MfShape { triangular, bell, gaussian_normal, gaussian_open };

const char* to_string(MfShape shape);
MfShape mf_shape_from_string(std::string_view name);  // throws ValidationError
std::array<MfShape, 4> all_mf_shapes();

/// One membership function. Parameter meaning depends on kind:
///   triangular:      p1 = left foot, p2 = right foot, peak at center
///   bell:            p1 = width a, p2 = slope b,  mu = 1/(1+|(x-c)/a|^(2b))
///   gaussian_*:      p1 = sigma,                  mu = exp(-(x-c)^2/(2 sigma^2))
struct MembershipFunction {
    MfShape kind = MfShape::triangular;
    double center = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;

    double eval(double x) const;
};

/// Uniform partition of [lo, hi] into n membership functions, centers at the
/// endpoints and equally spaced between. Neighboring functions cross at
/// mu = 0.5 (triangular: partition of unity; gaussian_open: doubled sigma).
std::vector<MembershipFunction> build_partition(double lo, double hi, int n, MfShape shape);

/// Zero-order Sugeno system, 5 MFs per input, 25 rules with constant
/// consequents. Inputs: rotor angle folded into one stroke, and the PI
/// reference current. Output is the compensating current Delta I_comp.
struct FuzzyCompensator {
    MfShape shape = MfShape::triangular;
    double theta_min = 0.0, theta_max = 0.0;  // one stroke period
    double iref_min = 0.0, iref_max = 0.0;
    std::array<MembershipFunction, 5> theta_mfs{};
    std::array<MembershipFunction, 5> iref_mfs{};
    std::array<double, 25> consequents{};  // rule (i,j) -> consequents[5*i + j]
};

/// Fresh compensator with zero consequents over [0, theta_hi) x [0, iref_hi].
FuzzyCompensator make_compensator(double theta_hi, double iref_hi, MfShape shape);

/// Product-t-norm rule strengths w_r = mu_theta_i * mu_iref_j, unnormalized,
/// inputs clamped to the declared ranges.
std::array<double, 25> rule_strengths(const FuzzyCompensator& fc, double theta, double iref);

/// Weighted-average defuzzification: sum(w_r c_r) / sum(w_r).
/// Throws NumericError if the rule-strength sum degenerates.
double evaluate(const FuzzyCompensator& fc, double theta, double iref);

struct TrainingSample {
    double theta = 0.0;
    double iref = 0.0;
    double target = 0.0;  // desired Delta I [A]
};

/// Least-squares consequent fit: minimizes sum of squared output errors plus
/// damping * |c|^2, via the damped 25x25 normal equations.
/// With damping == 0 a rank-deficient system throws NumericError.
void fit_consequents_lse(FuzzyCompensator& fc, std::span<const TrainingSample> samples,
                         double damping = 1e-8);

/// Exact analytic gradient of the squared output error over the consequents.
std::array<double, 25> consequent_gradient(const FuzzyCompensator& fc,
                                           std::span<const TrainingSample> samples);

/// Batch gradient descent on the squared error. Returns the loss after each
/// epoch; throws NumericError if the loss grows by more than 1e6x.
std::vector<double> fit_consequents_gd(FuzzyCompensator& fc,
                                       std::span<const TrainingSample> samples,
                                       double learning_rate, int epochs);

}  // namespace srsim
