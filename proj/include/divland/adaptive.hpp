#pragma once

namespace divland {

// Outer loop that scales the divergence gain so the thrust/divergence
// covariance settles on a small positive setpoint. P and I act relative to
// the current K', so the relative gain change depends only on (P, I, e_cov).
struct AdaptiveConfig {
    double cov_setpoint = 0.05;      // cov*, N/s
    double outer_p = 0.15;           // P in [0, 1]
    double outer_i = 0.005;          // I in [0, 1]
    double k_init = 50.0;            // N s
    double k_floor = 0.1;            // N s
    double convergence_band = 0.005; // |e_cov| threshold, N/s

    void validate() const;
};

struct AdaptiveState {
    double k_prime = 50.0;      // K'_z
    double k_effective = 50.0;  // K_z used by the inner loop
    double last_e_cov = 0.0;
};

AdaptiveState initial_adaptive_state(const AdaptiveConfig& cfg);

inline double cov_error(const AdaptiveConfig& cfg, double cov_now) {
    return cfg.cov_setpoint - cov_now;
}

// K_z = K'(1 + P e), then K' <- max(K'(1 + I e), k_floor) for the next period.
AdaptiveState update_gain(const AdaptiveConfig& cfg, const AdaptiveState& state, double cov_now);

} // namespace divland
