#include "divland/detector.hpp"

#include <cmath>

#include "divland/error.hpp"

namespace divland {

std::string_view to_string(Phase p) {
    switch (p) {
    case Phase::hover: return "hover";
    case Phase::landing: return "landing";
    case Phase::done: return "done";
    }
    return "unknown";
}

CovWindow::CovWindow(std::size_t capacity) : thrust_(capacity), theta_(capacity) {
    if (capacity < 2) throw ConfigError("CovWindow: capacity must be >= 2");
}

void CovWindow::push(double thrust, double theta) {
    thrust_[head_] = thrust;
    theta_[head_] = theta;
    head_ = (head_ + 1) % thrust_.size();
    if (count_ < thrust_.size()) ++count_;
}

void CovWindow::clear() {
    head_ = 0;
    count_ = 0;
}

std::optional<double> CovWindow::cov() const {
    if (!full()) return std::nullopt;
    return population_cov(thrust_, theta_);
}

double population_cov(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw ConfigError("population_cov: need two equal, non-empty samples");
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx) * (y[i] - my);
    return s / n;
}

void DetectorThresholds::validate() const {
    if (!std::isfinite(theta_thr) || !std::isfinite(cov_thr))
        throw ConfigError("detector thresholds must be finite");
}

bool exceeds(const TraceRecord& rec, const DetectorThresholds& thr) {
    return rec.cov && rec.theta > thr.theta_thr && *rec.cov > thr.cov_thr;
}

std::optional<Onset> detect_onset(std::span<const TraceRecord> trace,
                                  const DetectorThresholds& thr) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (exceeds(trace[i], thr)) return Onset{i, trace[i].t, trace[i].z};
    }
    return std::nullopt;
}

} // namespace divland
