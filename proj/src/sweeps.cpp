#include "divland/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "divland/error.hpp"

namespace divland {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t cell_seed(std::uint64_t base, std::size_t index) {
    // splitmix64 finalizer so neighbouring cells get unrelated streams
    std::uint64_t x = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <typename F>
void for_cells(std::size_t n, Execution exec, F&& f) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < m; ++i) f(static_cast<std::size_t>(i));
    } else {
        for (std::ptrdiff_t i = 0; i < m; ++i) f(static_cast<std::size_t>(i));
    }
}

void finish(SweepResult& r) {
    r.excluded = 0;
    for (const auto& row : r.rows)
        if (row.outcome != Outcome::detected) ++r.excluded;
    try {
        r.fit = fit_calibration(r.samples);
    } catch (const NumericalError&) {
        r.fit.reset();
    }
}

Outcome outcome_of(Termination t) {
    switch (t) {
    case Termination::detected:
    case Termination::converged: return Outcome::detected;
    case Termination::touchdown: return Outcome::touchdown_first;
    case Termination::timeout: return Outcome::timeout;
    case Termination::numerical_error: return Outcome::none;
    }
    return Outcome::none;
}

} // namespace

std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::detected: return "detected";
    case Outcome::none: return "none";
    case Outcome::timeout: return "timeout";
    case Outcome::touchdown_first: return "touchdown-first";
    }
    return "unknown";
}

std::vector<std::pair<double, double>> SweepResult::spread_by_gain() const {
    std::map<double, std::pair<double, double>> mm;
    for (const auto& row : rows) {
        if (row.outcome != Outcome::detected) continue;
        auto [it, fresh] = mm.try_emplace(row.gain, row.z, row.z);
        if (!fresh) {
            it->second.first = std::min(it->second.first, row.z);
            it->second.second = std::max(it->second.second, row.z);
        }
    }
    std::vector<std::pair<double, double>> out;
    for (const auto& [g, mn] : mm) out.emplace_back(g, mn.second - mn.first);
    return out;
}

ScenarioConfig detection_base() {
    ScenarioConfig c;
    c.z0 = 20.0;
    c.v_z0 = -1.0;
    c.controller.c2 = 0.05;
    c.stop = StopRule::detection;
    c.t_max = 120.0;
    return c;
}

ScenarioConfig gusty_base() {
    ScenarioConfig c = detection_base();
    c.env.gust_amplitude = 4.0;
    c.env.gust_rate = 1.0;
    c.vehicle.actuator_b = 0.5;
    c.vehicle.actuator_c = 0.5;
    c.detector.cov_thr = 0.1;
    return c;
}

ScenarioConfig hover_base() {
    ScenarioConfig c;
    c.mode = Mode::hover;
    c.stop = StopRule::convergence;
    c.controller.c2 = 0.0;
    c.adaptive = AdaptiveConfig{};
    c.v_z0 = 0.0;
    c.t_max = 300.0;
    return c;
}

ScenarioConfig edge_base() {
    ScenarioConfig c;
    c.mode = Mode::edge;
    c.stop = StopRule::touchdown;
    c.controller.c2 = 0.0;
    c.adaptive = AdaptiveConfig{};
    c.v_z0 = 0.0;
    c.t_max = 900.0;
    return c;
}

SweepResult detection_sweep(const ScenarioConfig& base, std::span<const double> gains,
                            std::span<const double> winds, bool pi_mode, Execution exec) {
    SweepResult r;
    r.rows.resize(gains.size() * winds.size());
    for_cells(r.rows.size(), exec, [&](std::size_t i) {
        ScenarioConfig c = base;
        c.controller.gain_p = gains[i / winds.size()];
        if (pi_mode) c.controller.gain_i = 1.0;
        c.env.wind_mean = winds[i % winds.size()];
        c.stop = StopRule::detection;
        c.seed = cell_seed(base.seed, i);
        const ScenarioResult s = run_scenario(c);
        SweepRow row{c.controller.gain_p, c.env.wind_mean, c.z0, outcome_of(s.termination), kNaN,
                     kNaN, c.controller.gain_p};
        if (s.termination == Termination::detected) {
            row.z = s.trace.back().z;
            row.t = s.trace.back().t;
        }
        r.rows[i] = row;
    });
    for (const auto& row : r.rows)
        if (row.outcome == Outcome::detected) r.samples.push_back({row.gain, row.z});
    finish(r);
    return r;
}

SweepResult gusty_sweep(const ScenarioConfig& base, std::span<const double> gains,
                        std::span<const double> winds, Execution exec) {
    return detection_sweep(base, gains, winds, false, exec);
}

HoverResult run_hover_ranging(const ScenarioConfig& cfg) {
    ScenarioConfig c = cfg;
    c.stop = StopRule::convergence;
    if (c.mode == Mode::landing) c.mode = Mode::hover;
    const ScenarioResult s = run_scenario(c);
    HoverResult h{s.termination, std::nullopt, kNaN};
    if (s.termination == Termination::converged) {
        h.converged = GainHeight{s.trace.back().k_z, s.trace.back().z};
        h.t = s.trace.back().t;
    }
    return h;
}

SweepResult hover_sweep(const ScenarioConfig& base, std::span<const double> heights,
                        std::span<const double> winds, Execution exec) {
    SweepResult r;
    r.rows.resize(heights.size() * winds.size());
    for_cells(r.rows.size(), exec, [&](std::size_t i) {
        ScenarioConfig c = base;
        c.z0 = heights[i / winds.size()];
        c.env.wind_mean = winds[i % winds.size()];
        c.seed = cell_seed(base.seed, i);
        const HoverResult h = run_hover_ranging(c);
        const double k0 = c.adaptive ? c.adaptive->k_init : c.controller.gain_p;
        SweepRow row{k0, c.env.wind_mean, c.z0, outcome_of(h.termination), kNaN, kNaN, kNaN};
        if (h.converged) {
            row.z = h.converged->z;
            row.k = h.converged->k;
            row.t = h.t;
        }
        r.rows[i] = row;
    });
    for (const auto& row : r.rows)
        if (row.outcome == Outcome::detected) r.samples.push_back({row.k, row.z});
    finish(r);
    return r;
}

EdgeLandingResult run_edge_landing(const ScenarioConfig& cfg) {
    ScenarioConfig c = cfg;
    c.mode = Mode::edge;
    c.stop = StopRule::touchdown;
    ScenarioResult s = run_scenario(c);
    EdgeLandingResult e;
    e.termination = s.termination;
    e.switched = s.switch_index.has_value();
    const double band = c.adaptive->convergence_band;
    for (const auto& rec : s.trace) {
        if (rec.phase != Phase::landing || !rec.cov) continue;
        if (std::abs(c.edge.landing_cov_setpoint - *rec.cov) < band) e.samples.push_back({rec.k_z, rec.z});
    }
    e.trace = std::move(s.trace);
    return e;
}

SweepResult edge_landing_battery(const ScenarioConfig& base, std::span<const double> heights,
                                 Execution exec) {
    SweepResult r;
    r.rows.resize(heights.size());
    std::vector<std::vector<GainHeight>> per(heights.size());
    for_cells(heights.size(), exec, [&](std::size_t i) {
        ScenarioConfig c = base;
        c.z0 = heights[i];
        c.seed = cell_seed(base.seed, i);
        EdgeLandingResult e = run_edge_landing(c);
        SweepRow row{c.adaptive->k_init, c.env.wind_mean, c.z0, Outcome::none, kNaN, kNaN, kNaN};
        if (!e.switched)
            row.outcome = e.termination == Termination::touchdown ? Outcome::touchdown_first
                                                                  : Outcome::timeout;
        else
            row.outcome = e.termination == Termination::touchdown ? Outcome::detected
                                                                  : outcome_of(e.termination);
        if (e.switched) {
            for (const auto& rec : e.trace) {
                if (rec.phase == Phase::landing) {
                    row.z = rec.z;
                    row.t = rec.t;
                    row.k = rec.k_z;
                    break;
                }
            }
        }
        per[i] = std::move(e.samples);
        r.rows[i] = row;
    });
    for (const auto& p : per) r.samples.insert(r.samples.end(), p.begin(), p.end());
    finish(r);
    return r;
}

std::vector<double> stepped(double lo, double hi, double step) {
    if (!(step > 0.0) || hi < lo) throw ConfigError("stepped: need step > 0 and hi >= lo");
    std::vector<double> v;
    const auto n = static_cast<std::size_t>(std::llround((hi - lo) / step));
    for (std::size_t i = 0; i <= n; ++i) v.push_back(lo + step * static_cast<double>(i));
    return v;
}

} // namespace divland
