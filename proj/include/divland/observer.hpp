#pragma once

#include <cstddef>
#include <vector>

#include "divland/dynamics.hpp"

namespace divland {

// Relative vertical velocity theta_z = v_z / z (the negative of divergence).
struct Observation {
    double theta_z = 0.0;  // 1/s
    double t = 0.0;        // s
};

// Throws NumericalError for z <= 0.
Observation observe_theta(const VehicleState& state);

// Backward difference between two observations. Throws NumericalError when
// curr.t <= prev.t.
double theta_dot(const Observation& prev, const Observation& curr);

// Number of whole control periods closest to delay/T.
std::size_t delay_steps(double delay, double T);

// Fixed-depth FIFO on the actuation path. push_pop(x) at step k returns the
// input pushed at step k - depth, or the pre-fill value while k < depth.
class DelayLine {
public:
    DelayLine(std::size_t depth, double prefill);

    double push_pop(double input);

    std::size_t depth() const { return buffer_.size(); }

private:
    std::vector<double> buffer_;
    std::size_t head_ = 0;
};

} // namespace divland
