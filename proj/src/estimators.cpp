#include "divland/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "divland/error.hpp"

namespace divland {

namespace {
constexpr double kSingularEps = 1e-9;
}

double z_from_accel(double theta, double theta_dot, double a_z) {
    const double den = theta * theta + theta_dot;
    if (std::abs(den) < kSingularEps)
        throw NumericalError("z_from_accel: theta^2 + theta_dot is singular");
    return a_z / den;
}

double z_from_thrust(double u_z, double c2) {
    if (!(c2 > 0.0)) throw ConfigError("z_from_thrust: c2 must be > 0");
    return u_z / (c2 * c2);
}

double z_from_thrust_horizontal(double a_x, double theta_x, double theta_z) {
    return z_from_thrust_horizontal(a_x, theta_x, theta_z, 0.0);
}

double z_from_thrust_horizontal(double a_x, double theta_x, double theta_z, double theta_x_dot) {
    if (theta_z == 0.0)
        throw NumericalError("z_from_thrust_horizontal: theta_z = 0 gives no height information");
    const double den = theta_x_dot + theta_x * theta_z;
    if (std::abs(den) < kSingularEps)
        throw NumericalError("z_from_thrust_horizontal: singular denominator");
    return a_x / den;
}

PerfectLandingCurve perfect_landing_thrust(std::span<const double> z_grid, double c2,
                                           const EnvParams& env, const VehicleParams& vehicle) {
    if (!(c2 > 0.0)) throw ConfigError("perfect_landing_thrust: c2 must be > 0");
    PerfectLandingCurve out;
    out.z.reserve(z_grid.size());
    out.thrust.reserve(z_grid.size());
    for (std::size_t i = 0; i < z_grid.size(); ++i) {
        const double z = z_grid[i];
        if (!(z >= 0.0)) throw ConfigError("perfect_landing_thrust: heights must be >= 0");
        if (i > 0 && !(z > z_grid[i - 1]))
            throw ConfigError("perfect_landing_thrust: heights must be strictly increasing");
        const double v_z = -c2 * z;
        const double a_z = c2 * c2 * z;
        const double f_d = drag_force(env.wind_mean, v_z, vehicle.drag_coeff_half);
        out.z.push_back(z);
        out.thrust.push_back(std::max(vehicle.mass * (a_z + vehicle.gravity) - f_d, 0.0));
    }
    return out;
}

double still_air_height_for_thrust(double thrust, double c2, const VehicleParams& vehicle) {
    if (!(c2 > 0.0)) throw ConfigError("still_air_height_for_thrust: c2 must be > 0");
    // k c4 z^2 - m c4 z + (thrust - m g) = 0 ; v_air = c2 z > 0 so drag lifts
    const double c4 = c2 * c2;
    const double a = vehicle.drag_coeff_half * c4;
    const double b = -vehicle.mass * c4;
    const double c = thrust - vehicle.mass * vehicle.gravity;
    if (a == 0.0) return -c / b;
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) throw NumericalError("still_air_height_for_thrust: thrust not reachable");
    // smaller root lies on the branch connected to z = 0
    const double q = -0.5 * (b - std::sqrt(disc));
    return c / q;
}

CalibrationLine fit_calibration(std::span<const GainHeight> samples) {
    const std::size_t n = samples.size();
    if (n < 2) throw NumericalError("fit_calibration: need at least 2 samples");
    double mk = 0.0, mz = 0.0;
    for (const auto& s : samples) {
        mk += s.k;
        mz += s.z;
    }
    mk /= static_cast<double>(n);
    mz /= static_cast<double>(n);
    double skk = 0.0, skz = 0.0, szz = 0.0;
    for (const auto& s : samples) {
        const double dk = s.k - mk;
        const double dz = s.z - mz;
        skk += dk * dk;
        skz += dk * dz;
        szz += dz * dz;
    }
    if (skk <= 0.0) throw NumericalError("fit_calibration: all gains equal");
    CalibrationLine line;
    line.n = n;
    line.slope = skz / skk;
    line.intercept = mz - line.slope * mk;
    double ss_res = 0.0;
    for (const auto& s : samples) {
        const double r = s.z - estimate_z_from_gain(line, s.k);
        ss_res += r * r;
    }
    line.r_squared = szz > 0.0 ? std::clamp(1.0 - ss_res / szz, 0.0, 1.0) : 1.0;
    return line;
}

} // namespace divland
