#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "divland/estimators.hpp"
#include "divland/parallel.hpp"
#include "divland/scenario.hpp"

namespace divland {

enum class Outcome { detected, none, timeout, touchdown_first };

std::string_view to_string(Outcome o);

struct SweepRow {
    double gain = 0.0;   // K_z setting, or initial K for adaptive runs
    double wind = 0.0;   // m/s
    double z0 = 0.0;     // m
    Outcome outcome = Outcome::none;
    double z = 0.0;      // detection / convergence height, NaN when not reached
    double t = 0.0;      // s, NaN when not reached
    double k = 0.0;      // K_z at the event (== gain for fixed-gain sweeps)
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<GainHeight> samples;  // points entering the fit
    std::optional<FitResult> fit;     // empty when the fit is degenerate
    std::size_t excluded = 0;         // rows left out of the fit

    // max - min of event height per distinct gain
    std::vector<std::pair<double, double>> spread_by_gain() const;
};

// Defaults for the fixed-gain detection sweep: z0 = 20, v0 = -1,
// c2 = 0.05, k = 0.5, T = 0.03, delay 0.15.
ScenarioConfig detection_base();

// Gusty variant: W = 4, a = 1, b = c = 0.5, cov threshold 0.1.
ScenarioConfig gusty_base();

// Hover ranging: c2 = 0, adaptive with cov* = 0.05, K_init = 50, t_max = 300.
ScenarioConfig hover_base();

// Landing on the edge of oscillation.
ScenarioConfig edge_base();

// One run per (gain, wind) cell, stopped at oscillation detection. pi_mode
// sets I_z = 1. Cells are ordered by (gain, wind).
SweepResult detection_sweep(const ScenarioConfig& base, std::span<const double> gains,
                            std::span<const double> winds, bool pi_mode,
                            Execution exec = Execution::parallel);

SweepResult gusty_sweep(const ScenarioConfig& base, std::span<const double> gains,
                        std::span<const double> winds, Execution exec = Execution::parallel);

struct HoverResult {
    Termination termination;
    std::optional<GainHeight> converged;
    double t = 0.0;  // convergence time, NaN when not converged
};

HoverResult run_hover_ranging(const ScenarioConfig& cfg);

// One hover-ranging run per (height, wind) cell, ordered by (height, wind).
SweepResult hover_sweep(const ScenarioConfig& base, std::span<const double> heights,
                        std::span<const double> winds, Execution exec = Execution::parallel);

struct EdgeLandingResult {
    Termination termination;
    bool switched = false;
    std::vector<GainHeight> samples;  // in-band landing-phase (K_z, z)
    std::vector<TraceRecord> trace;
};

EdgeLandingResult run_edge_landing(const ScenarioConfig& cfg);

// One edge landing per start height; the fit runs over all in-band samples.
SweepResult edge_landing_battery(const ScenarioConfig& base, std::span<const double> heights,
                                 Execution exec = Execution::parallel);

// Symmetric grid lo, lo + step, ..., hi.
std::vector<double> stepped(double lo, double hi, double step);

} // namespace divland
