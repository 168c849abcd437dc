#include "divland/scenario.hpp"

#include <cmath>
#include <random>

#include "divland/error.hpp"
#include "divland/observer.hpp"

namespace divland {

void ScenarioConfig::validate() const {
    vehicle.validate();
    env.validate();
    controller.validate();
    detector.validate();
    if (adaptive) adaptive->validate();
    if (mode != Mode::landing && !adaptive)
        throw ConfigError("hover and edge modes need an [adaptive] section");
    if (!(T > 0.0)) throw ConfigError("scenario.T must be > 0");
    if (!(delay >= 0.0)) throw ConfigError("scenario.delay must be >= 0");
    if (!(z_floor >= 0.0)) throw ConfigError("scenario.z_floor must be >= 0");
    if (!(z0 > z_floor)) throw ConfigError("scenario.z0 must exceed z_floor");
    if (!std::isfinite(v_z0)) throw ConfigError("scenario.v_z0 must be finite");
    if (!(t_max > 0.0)) throw ConfigError("scenario.t_max must be > 0");
    if (!(noise_sigma >= 0.0)) throw ConfigError("scenario.noise_sigma must be >= 0");
    if (window < 2) throw ConfigError("detector.window must be >= 2");
    if (!(edge.landing_c2 >= 0.0)) throw ConfigError("edge.landing_c2 must be >= 0");
}

std::string_view to_string(Termination t) {
    switch (t) {
    case Termination::touchdown: return "touchdown";
    case Termination::timeout: return "timeout";
    case Termination::detected: return "detected";
    case Termination::converged: return "converged";
    case Termination::numerical_error: return "numerical_error";
    }
    return "unknown";
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();

    ScenarioResult out;
    const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_max / cfg.T));
    out.trace.reserve(std::min<std::size_t>(steps + 2, 1u << 20));

    const StepOptions opts{cfg.integrator, cfg.z_floor};
    const double hover_thrust = to_thrust(0.0, cfg.vehicle);

    VehicleState state{cfg.z0, cfg.v_z0, 0.0};
    DelayLine delay(delay_steps(cfg.delay, cfg.T), hover_thrust);
    CovWindow window(cfg.window);
    ControllerState ctrl;
    AdaptiveState ad = cfg.adaptive ? initial_adaptive_state(*cfg.adaptive)
                                    : AdaptiveState{cfg.controller.gain_p, cfg.controller.gain_p, 0.0};
    AdaptiveConfig ad_cfg = cfg.adaptive.value_or(AdaptiveConfig{});

    Phase phase = Phase::landing;
    double c2 = cfg.controller.c2;
    if (cfg.mode == Mode::hover) {
        phase = Phase::hover;
        c2 = 0.0;
    } else if (cfg.mode == Mode::edge) {
        phase = Phase::hover;
        c2 = 0.0;
        ad_cfg.cov_setpoint = cfg.edge.hover_cov_setpoint;
    }

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::optional<double> last_effective;

    try {
        for (std::size_t k = 0;; ++k) {
            TraceRecord rec;
            rec.t = state.t;
            rec.z = state.z;
            rec.v_z = state.v_z;
            rec.wind = wind_at(cfg.env, state.t);
            rec.phase = phase;

            double theta = observe_theta(state).theta_z;
            if (cfg.noise_sigma > 0.0) theta += cfg.noise_sigma * noise(rng);
            rec.theta = theta;

            if (last_effective) window.push(*last_effective, theta);
            rec.cov = window.cov();

            if (phase == Phase::hover && cfg.mode == Mode::edge && rec.cov &&
                *rec.cov >= cfg.edge.trigger_cov) {
                phase = Phase::landing;
                rec.phase = phase;
                c2 = cfg.edge.landing_c2;
                ad_cfg.cov_setpoint = cfg.edge.landing_cov_setpoint;
                window.clear();
                rec.cov.reset();
                out.switch_index = k;
            }

            const double setpoint = -c2;
            rec.theta_setpoint = setpoint;
            rec.k_z = ad.k_effective;
            rec.k_prime = ad.k_prime;

            const PiOutput pi = pi_control(cfg.controller, ctrl, theta, cfg.T, ad.k_effective, setpoint);
            ctrl = pi.state;
            rec.u_z = pi.u_z;

            const bool adaptive_on = cfg.adaptive.has_value() && rec.cov.has_value();
            if (adaptive_on) ad = update_gain(ad_cfg, ad, *rec.cov);

            const double commanded = to_thrust(pi.u_z, cfg.vehicle);
            ctrl.last_thrust = commanded;
            if (!std::isfinite(commanded)) throw NumericalError("non-finite thrust command");
            rec.u_prime_commanded = commanded;
            const double delayed = delay.push_pop(commanded);
            const ThrustCommand applied = effective_thrust(state, delayed, cfg.env, cfg.vehicle);
            rec.u_prime_effective = applied.effective_thrust;
            out.trace.push_back(rec);

            if (cfg.stop == StopRule::detection && exceeds(rec, cfg.detector)) {
                out.termination = Termination::detected;
                return out;
            }
            if (cfg.stop == StopRule::convergence && adaptive_on &&
                std::abs(cov_error(ad_cfg, *rec.cov)) < ad_cfg.convergence_band) {
                out.termination = Termination::converged;
                return out;
            }
            if (state.t + 0.5 * cfg.T >= cfg.t_max) {
                out.termination = Termination::timeout;
                return out;
            }

            state = step_effective(state, applied.effective_thrust, cfg.env, cfg.vehicle, cfg.T, opts);
            last_effective = applied.effective_thrust;

            if (touched_down(state, cfg.z_floor)) {
                TraceRecord fin;
                fin.t = state.t;
                fin.z = state.z;
                fin.v_z = state.v_z;
                fin.theta = observe_theta(state).theta_z;
                fin.theta_setpoint = setpoint;
                fin.k_z = ad.k_effective;
                fin.k_prime = ad.k_prime;
                fin.wind = wind_at(cfg.env, state.t);
                fin.phase = Phase::done;
                out.trace.push_back(fin);
                out.termination = Termination::touchdown;
                return out;
            }
        }
    } catch (const NumericalError& e) {
        out.termination = Termination::numerical_error;
        out.error = e.what();
    }
    return out;
}

} // namespace divland
