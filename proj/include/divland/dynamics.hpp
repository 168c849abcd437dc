#pragma once

// Vertical point-mass dynamics: gravity, quadratic drag relative to the
// (possibly gusty) air mass, and airflow-dependent actuator effectiveness.
// All quantities are SI and signed along +z (up).

namespace divland {

struct VehicleParams {
    double mass = 1.0;              // kg
    double gravity = 9.81;          // m/s^2
    double drag_coeff_half = 0.5;   // 1/2 rho C_D A, kg/m
    double actuator_b = 0.0;        // effectiveness slope loss, 1/(m/s)
    double actuator_c = 0.0;        // effectiveness offset loss, N/(m/s)

    void validate() const;
};

struct EnvParams {
    double wind_mean = 0.0;         // m/s, signed along z
    double gust_amplitude = 0.0;    // W, m/s
    double gust_rate = 0.0;         // a, rad/s

    void validate() const;
};

struct VehicleState {
    double z = 1.0;    // height above the surface, m
    double v_z = 0.0;  // m/s, positive up
    double t = 0.0;    // s
};

struct ThrustCommand {
    double commanded_thrust = 0.0;  // N, before effectiveness loss
    double effective_thrust = 0.0;  // N, after effectiveness loss
};

enum class Integrator { rk4, euler };

struct StepOptions {
    Integrator integrator = Integrator::rk4;
    double z_floor = 0.0;  // height clamp; the returned z never drops below it
};

double wind_at(const EnvParams& env, double t);

// Signed drag force for relative airflow v_air = v_wind - v_z.
double drag_force(double v_wind, double v_z, double drag_coeff_half);

// max{u - b v_air u - c v_air, 0}
double apply_actuator_effectiveness(double u_commanded, double v_air, double b, double c);

// Vertical acceleration for a given effective thrust at the current wind.
double accel(const VehicleState& state, double effective_thrust, const EnvParams& env,
             const VehicleParams& vehicle);

// Effective thrust for one control period: effectiveness evaluated once with
// the airflow at the period start, then held.
ThrustCommand effective_thrust(const VehicleState& state, double commanded_thrust,
                               const EnvParams& env, const VehicleParams& vehicle);

// Advance one ZOH period of length T with the commanded thrust held.
// Throws ConfigError for T <= 0 or non-finite thrust, NumericalError for z <= 0.
VehicleState step(const VehicleState& state, double commanded_thrust, const EnvParams& env,
                  const VehicleParams& vehicle, double T, const StepOptions& opts = {});

// Same as step() but with an already-effective thrust (no effectiveness loss applied).
VehicleState step_effective(const VehicleState& state, double effective_thrust,
                            const EnvParams& env, const VehicleParams& vehicle, double T,
                            const StepOptions& opts = {});

inline bool touched_down(const VehicleState& s, double z_floor) { return s.z <= z_floor; }

} // namespace divland
