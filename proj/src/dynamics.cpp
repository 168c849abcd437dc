#include "divland/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "divland/error.hpp"

namespace divland {

void VehicleParams::validate() const {
    if (!(mass > 0.0)) throw ConfigError("vehicle.mass must be > 0");
    if (!(gravity >= 0.0)) throw ConfigError("vehicle.gravity must be >= 0");
    if (!(drag_coeff_half >= 0.0)) throw ConfigError("vehicle.drag_coeff_half must be >= 0");
    if (!(actuator_b >= 0.0) || !(actuator_c >= 0.0))
        throw ConfigError("vehicle.actuator_b and actuator_c must be >= 0");
}

void EnvParams::validate() const {
    if (!std::isfinite(wind_mean)) throw ConfigError("env.wind_mean must be finite");
    if (!(gust_amplitude >= 0.0)) throw ConfigError("env.gust_amplitude must be >= 0");
    if (!(gust_rate >= 0.0)) throw ConfigError("env.gust_rate must be >= 0");
}

double wind_at(const EnvParams& env, double t) {
    return env.wind_mean + env.gust_amplitude * std::sin(env.gust_rate * t);
}

double drag_force(double v_wind, double v_z, double drag_coeff_half) {
    const double v_air = v_wind - v_z;
    if (v_air == 0.0) return 0.0;
    return std::copysign(drag_coeff_half * v_air * v_air, v_air);
}

double apply_actuator_effectiveness(double u_commanded, double v_air, double b, double c) {
    return std::max(u_commanded - b * v_air * u_commanded - c * v_air, 0.0);
}

double accel(const VehicleState& state, double effective_thrust, const EnvParams& env,
             const VehicleParams& vehicle) {
    const double f_drag = drag_force(wind_at(env, state.t), state.v_z, vehicle.drag_coeff_half);
    return -vehicle.gravity + (effective_thrust + f_drag) / vehicle.mass;
}

ThrustCommand effective_thrust(const VehicleState& state, double commanded_thrust,
                               const EnvParams& env, const VehicleParams& vehicle) {
    const double v_air = wind_at(env, state.t) - state.v_z;
    return {commanded_thrust, apply_actuator_effectiveness(commanded_thrust, v_air,
                                                           vehicle.actuator_b,
                                                           vehicle.actuator_c)};
}

namespace {

struct Deriv {
    double dz;
    double dv;
};

} // namespace

VehicleState step_effective(const VehicleState& state, double thrust, const EnvParams& env,
                            const VehicleParams& vehicle, double T, const StepOptions& opts) {
    if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("step: T must be > 0");
    if (!std::isfinite(thrust)) throw ConfigError("step: thrust must be finite");
    if (!(state.z > 0.0)) throw NumericalError("step: vehicle is not airborne (z <= 0)");

    auto f = [&](double t, double v) {
        const VehicleState s{0.0, v, t};
        return Deriv{v, accel(s, thrust, env, vehicle)};
    };

    VehicleState next = state;
    if (opts.integrator == Integrator::euler) {
        const Deriv k1 = f(state.t, state.v_z);
        next.z = state.z + T * k1.dz;
        next.v_z = state.v_z + T * k1.dv;
    } else {
        const double h = 0.5 * T;
        const Deriv k1 = f(state.t, state.v_z);
        const Deriv k2 = f(state.t + h, state.v_z + h * k1.dv);
        const Deriv k3 = f(state.t + h, state.v_z + h * k2.dv);
        const Deriv k4 = f(state.t + T, state.v_z + T * k3.dv);
        next.z = state.z + T / 6.0 * (k1.dz + 2.0 * k2.dz + 2.0 * k3.dz + k4.dz);
        next.v_z = state.v_z + T / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    }
    next.t = state.t + T;
    if (next.z < opts.z_floor) next.z = opts.z_floor;
    return next;
}

VehicleState step(const VehicleState& state, double commanded_thrust, const EnvParams& env,
                  const VehicleParams& vehicle, double T, const StepOptions& opts) {
    if (!std::isfinite(commanded_thrust)) throw ConfigError("step: thrust must be finite");
    const ThrustCommand cmd = effective_thrust(state, commanded_thrust, env, vehicle);
    return step_effective(state, cmd.effective_thrust, env, vehicle, T, opts);
}

} // namespace divland
