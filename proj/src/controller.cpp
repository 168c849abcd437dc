#include "divland/controller.hpp"

#include <algorithm>
#include <cmath>

#include "divland/error.hpp"

namespace divland {

void ControllerConfig::validate() const {
    if (!(gain_p >= 0.0)) throw ConfigError("controller.gain_p must be >= 0");
    if (!(gain_i >= 0.0)) throw ConfigError("controller.gain_i must be >= 0");
    if (!(c2 >= 0.0)) throw ConfigError("controller.c2 must be >= 0");
    if (!(integrator_limit > 0.0)) throw ConfigError("controller.integrator_limit must be > 0");
}

double p_control(double gain, double setpoint, double theta) { return gain * (setpoint - theta); }

double p_control(const ControllerConfig& cfg, double theta) {
    return p_control(cfg.gain_p, cfg.setpoint(), theta);
}

PiOutput pi_control(const ControllerConfig& cfg, const ControllerState& state, double theta,
                    double T, double gain_p, double setpoint) {
    if (!(T > 0.0)) throw ConfigError("pi_control: T must be > 0");
    const double e = setpoint - theta;
    ControllerState next = state;
    double integral_term = 0.0;
    if (cfg.gain_i > 0.0) {
        next.integral_error = state.integral_error + e * T;
        // anti-windup: keep the stored integral consistent with the clamp
        const double bound = cfg.integrator_limit / cfg.gain_i;
        next.integral_error = std::clamp(next.integral_error, -bound, bound);
        integral_term = cfg.gain_i * next.integral_error;
    }
    const double u_z = gain_p * e + integral_term;
    next.last_command_u_z = u_z;
    return {u_z, next};
}

PiOutput pi_control(const ControllerConfig& cfg, const ControllerState& state, double theta,
                    double T) {
    return pi_control(cfg, state, theta, T, cfg.gain_p, cfg.setpoint());
}

double to_thrust(double u_z, const VehicleParams& vehicle) {
    return vehicle.mass * (u_z + vehicle.gravity);
}

} // namespace divland
