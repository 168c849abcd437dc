#pragma once

#include <span>
#include <utility>
#include <vector>

#include "divland/dynamics.hpp"

namespace divland {

// Least-squares line z = slope K + intercept.
struct CalibrationLine {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t n = 0;
};
using FitResult = CalibrationLine;

struct GainHeight {
    double k;
    double z;
};

// z = a_z / (theta^2 + theta_dot). Throws NumericalError when the
// denominator is within 1e-9 of zero.
double z_from_accel(double theta, double theta_dot, double a_z);

// z = u_z / c^4. Throws ConfigError for c2 <= 0.
double z_from_thrust(double u_z, double c2);

// z = a_x / (theta_x theta_z), and the full form a_x / (theta_x_dot + theta_x theta_z).
double z_from_thrust_horizontal(double a_x, double theta_x, double theta_z);
double z_from_thrust_horizontal(double a_x, double theta_x, double theta_z, double theta_x_dot);

struct PerfectLandingCurve {
    std::vector<double> z;
    std::vector<double> thrust;  // u'_z, N
};

// Thrust needed to follow v_z = -c2 z exactly: m(c2^2 z + g) - f_D.
PerfectLandingCurve perfect_landing_thrust(std::span<const double> z_grid, double c2,
                                           const EnvParams& env, const VehicleParams& vehicle);

// Height at which the still-air curve delivers the given thrust (inverse of
// the still-air perfect-landing relation, positive root).
double still_air_height_for_thrust(double thrust, double c2, const VehicleParams& vehicle);

// OLS of z on K. Throws NumericalError with fewer than 2 samples or all K equal.
CalibrationLine fit_calibration(std::span<const GainHeight> samples);

inline double estimate_z_from_gain(const CalibrationLine& line, double K) {
    return line.slope * K + line.intercept;
}

} // namespace divland
