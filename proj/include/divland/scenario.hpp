#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divland/adaptive.hpp"
#include "divland/controller.hpp"
#include "divland/detector.hpp"
#include "divland/dynamics.hpp"
#include "divland/trace.hpp"

namespace divland {

enum class Mode {
    landing,  // fixed- or adaptive-gain descent at theta* = -c2
    hover,    // adaptive gain at theta* = 0
    edge,     // hover until the trigger, then adaptive landing
};

enum class StopRule {
    touchdown,    // run until touchdown or t_max
    detection,    // also stop at the first record that exceeds the detector thresholds
    convergence,  // also stop at the first record with |e_cov| < convergence_band
};

// Two-phase settings for landing on the edge of oscillation.
struct EdgeConfig {
    double hover_cov_setpoint = 0.05;   // cov* while hovering
    double trigger_cov = 0.2;           // landing starts once cov >= trigger_cov
    double landing_c2 = 0.05;
    double landing_cov_setpoint = 0.05;
};

struct ScenarioConfig {
    VehicleParams vehicle;
    EnvParams env;
    ControllerConfig controller;
    std::optional<AdaptiveConfig> adaptive;
    DetectorThresholds detector;
    EdgeConfig edge;
    Mode mode = Mode::landing;
    StopRule stop = StopRule::touchdown;
    Integrator integrator = Integrator::rk4;
    double T = 0.03;          // s
    double delay = 0.15;      // s, actuation delay
    double z0 = 10.0;         // m
    double v_z0 = -2.0;       // m/s
    double t_max = 120.0;     // s
    double z_floor = 0.05;    // m
    double noise_sigma = 0.0; // std dev of additive theta noise, 1/s
    std::uint64_t seed = 1;
    std::size_t window = 20;

    void validate() const;
};

enum class Termination { touchdown, timeout, detected, converged, numerical_error };

std::string_view to_string(Termination t);

struct ScenarioResult {
    std::vector<TraceRecord> trace;
    Termination termination = Termination::timeout;
    std::string error;  // set when termination == numerical_error
    // index of the first landing-phase record in edge mode
    std::optional<std::size_t> switch_index;
};

// Per step: observe, add noise, covariance update (thrust applied over the
// previous period against the new theta), controller, adaptive update,
// thrust conversion, delay line, actuator effectiveness, dynamics step.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

} // namespace divland
