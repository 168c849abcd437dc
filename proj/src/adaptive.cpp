#include "divland/adaptive.hpp"

#include <algorithm>
#include <cmath>

#include "divland/error.hpp"

namespace divland {

void AdaptiveConfig::validate() const {
    if (!(outer_p >= 0.0 && outer_p <= 1.0)) throw ConfigError("adaptive.outer_p must be in [0,1]");
    if (!(outer_i >= 0.0 && outer_i <= 1.0)) throw ConfigError("adaptive.outer_i must be in [0,1]");
    if (!(k_floor >= 0.0)) throw ConfigError("adaptive.k_floor must be >= 0");
    if (!(k_init > k_floor)) throw ConfigError("adaptive.k_init must exceed k_floor");
    if (!(convergence_band >= 0.0)) throw ConfigError("adaptive.convergence_band must be >= 0");
    if (!std::isfinite(cov_setpoint)) throw ConfigError("adaptive.cov_setpoint must be finite");
}

AdaptiveState initial_adaptive_state(const AdaptiveConfig& cfg) {
    return {cfg.k_init, cfg.k_init, 0.0};
}

AdaptiveState update_gain(const AdaptiveConfig& cfg, const AdaptiveState& state, double cov_now) {
    const double e = cov_error(cfg, cov_now);
    AdaptiveState next;
    next.last_e_cov = e;
    next.k_effective = std::max(state.k_prime * (1.0 + cfg.outer_p * e), 0.0);
    next.k_prime = std::max(state.k_prime * (1.0 + cfg.outer_i * e), cfg.k_floor);
    return next;
}

} // namespace divland
