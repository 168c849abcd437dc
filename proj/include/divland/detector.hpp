#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "divland/trace.hpp"

namespace divland {

// Paired ring buffer of (effective thrust, theta_z) samples.
class CovWindow {
public:
    explicit CovWindow(std::size_t capacity = 20);

    void push(double thrust, double theta);
    void clear();

    bool full() const { return count_ == thrust_.size(); }
    std::size_t size() const { return count_; }
    std::size_t capacity() const { return thrust_.size(); }

    // Population covariance, empty until the window is full.
    std::optional<double> cov() const;

private:
    std::vector<double> thrust_;
    std::vector<double> theta_;
    std::size_t head_ = 0;   // next slot to overwrite
    std::size_t count_ = 0;
};

// (1/N) sum (x - mean x)(y - mean y). Throws ConfigError on size mismatch or N < 1.
double population_cov(std::span<const double> x, std::span<const double> y);

struct DetectorThresholds {
    double theta_thr = 0.01;  // 1/s
    double cov_thr = 0.01;    // N/s

    void validate() const;
};

struct Onset {
    std::size_t index;
    double t;
    double z;
};

// Earliest record with theta > theta_thr and a defined cov > cov_thr.
std::optional<Onset> detect_onset(std::span<const TraceRecord> trace,
                                  const DetectorThresholds& thr);

// Single-record test used by the scenario runner for early termination.
bool exceeds(const TraceRecord& rec, const DetectorThresholds& thr);

} // namespace divland
