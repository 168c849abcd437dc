#pragma once

#include "divland/dynamics.hpp"

namespace divland {

struct ControllerConfig {
    double gain_p = 20.0;          // K_z
    double gain_i = 0.0;           // I_z, 0 disables the integrator
    double c2 = 0.2;               // divergence magnitude; setpoint is -c2
    double integrator_limit = 2.0 * 1.0 * 9.81;  // N-equivalent clamp on I_z * integral

    double setpoint() const { return -c2; }
    void validate() const;
};

struct ControllerState {
    double integral_error = 0.0;   // accumulated error * s
    double last_command_u_z = 0.0; // m/s^2
    double last_thrust = 0.0;      // N
};

// u_z = K (theta* - theta)
double p_control(const ControllerConfig& cfg, double theta);

// Variant with an explicit setpoint, used when the gain or setpoint is
// scheduled by an outer loop.
double p_control(double gain, double setpoint, double theta);

struct PiOutput {
    double u_z;
    ControllerState state;
};

// u_z = K e + I sum(e T), with the integral contribution clamped to
// +-integrator_limit. The gain argument overrides cfg.gain_p so that adaptive
// runs can drive the proportional gain.
PiOutput pi_control(const ControllerConfig& cfg, const ControllerState& state, double theta,
                    double T);
PiOutput pi_control(const ControllerConfig& cfg, const ControllerState& state, double theta,
                    double T, double gain_p, double setpoint);

// u'_z = m (u_z + g), no clamping.
double to_thrust(double u_z, const VehicleParams& vehicle);

} // namespace divland
