#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "divland/estimators.hpp"
#include "divland/sweeps.hpp"
#include "divland/trace.hpp"

namespace divland {

// Floats are written with %.17g; an undefined covariance is an empty field.
void write_trace_csv(std::ostream& os, std::span<const TraceRecord> trace);
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);
void write_samples_csv(std::ostream& os, std::span<const GainHeight> samples);
void write_curve_csv(std::ostream& os, std::span<const std::string> labels,
                     std::span<const PerfectLandingCurve> curves);

// Opens path for writing and calls fn(stream); throws ConfigError when the
// file cannot be created.
template <typename Fn>
void write_file(const std::filesystem::path& path, Fn&& fn);

std::string format_double(double v);

} // namespace divland

#include <fstream>

#include "divland/error.hpp"

template <typename Fn>
void divland::write_file(const std::filesystem::path& path, Fn&& fn) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot write " + path.string());
    fn(os);
    if (!os) throw ConfigError("write failed for " + path.string());
}
