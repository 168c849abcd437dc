#pragma once

#include <optional>
#include <string_view>

namespace divland {

enum class Phase { hover, landing, done };

std::string_view to_string(Phase p);

// One row per control period, everything sampled at time t: the state and
// observation at t, the command computed from it, the thrust applied over
// [t, t+T], and the windowed covariance as of t.
struct TraceRecord {
    double t = 0.0;
    double z = 0.0;
    double v_z = 0.0;
    double theta = 0.0;            // observed theta_z (including any noise)
    double theta_setpoint = 0.0;
    double u_z = 0.0;              // m/s^2
    double u_prime_commanded = 0.0;  // N, before delay and effectiveness
    double u_prime_effective = 0.0;  // N, applied over this period
    std::optional<double> cov;     // N/s, empty until the window fills
    double k_z = 0.0;
    double k_prime = 0.0;
    double wind = 0.0;
    Phase phase = Phase::landing;
};

} // namespace divland
