#include "divland/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace divland {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trace_csv(std::ostream& os, std::span<const TraceRecord> trace) {
    os << "t,z,v_z,theta,theta_setpoint,u_z,u_prime_commanded,u_prime_effective,cov,K_z,K_prime,"
          "wind,phase\n";
    for (const auto& r : trace) {
        os << format_double(r.t) << ',' << format_double(r.z) << ',' << format_double(r.v_z) << ','
           << format_double(r.theta) << ',' << format_double(r.theta_setpoint) << ','
           << format_double(r.u_z) << ',' << format_double(r.u_prime_commanded) << ','
           << format_double(r.u_prime_effective) << ',';
        if (r.cov) os << format_double(*r.cov);
        os << ',' << format_double(r.k_z) << ',' << format_double(r.k_prime) << ','
           << format_double(r.wind) << ',' << to_string(r.phase) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    os << "gain,wind,z0,outcome,z,t,K_z\n";
    for (const auto& r : sweep.rows) {
        os << format_double(r.gain) << ',' << format_double(r.wind) << ',' << format_double(r.z0)
           << ',' << to_string(r.outcome) << ',';
        if (r.outcome == Outcome::detected || !std::isnan(r.z)) os << format_double(r.z);
        os << ',';
        if (!std::isnan(r.t)) os << format_double(r.t);
        os << ',';
        if (!std::isnan(r.k)) os << format_double(r.k);
        os << '\n';
    }
}

void write_samples_csv(std::ostream& os, std::span<const GainHeight> samples) {
    os << "K_z,z\n";
    for (const auto& s : samples) os << format_double(s.k) << ',' << format_double(s.z) << '\n';
}

void write_curve_csv(std::ostream& os, std::span<const std::string> labels,
                     std::span<const PerfectLandingCurve> curves) {
    os << "condition,z,u_prime\n";
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = 0; j < curves[i].z.size(); ++j)
            os << labels[i] << ',' << format_double(curves[i].z[j]) << ','
               << format_double(curves[i].thrust[j]) << '\n';
}

} // namespace divland
