#include "divland/observer.hpp"

#include <cmath>

#include "divland/error.hpp"

namespace divland {

Observation observe_theta(const VehicleState& state) {
    if (!(state.z > 0.0)) throw NumericalError("observe_theta: undefined for z <= 0");
    return {state.v_z / state.z, state.t};
}

double theta_dot(const Observation& prev, const Observation& curr) {
    const double dt = curr.t - prev.t;
    if (!(dt > 0.0)) throw NumericalError("theta_dot: non-positive time delta");
    return (curr.theta_z - prev.theta_z) / dt;
}

std::size_t delay_steps(double delay, double T) {
    if (!(T > 0.0)) throw ConfigError("delay_steps: T must be > 0");
    if (!(delay >= 0.0)) throw ConfigError("delay_steps: delay must be >= 0");
    return static_cast<std::size_t>(std::llround(delay / T));
}

DelayLine::DelayLine(std::size_t depth, double prefill) : buffer_(depth, prefill) {}

double DelayLine::push_pop(double input) {
    if (buffer_.empty()) return input;
    const double out = buffer_[head_];
    buffer_[head_] = input;
    head_ = (head_ + 1) % buffer_.size();
    return out;
}

} // namespace divland
