#include <cstdio>
#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divland/analysis.hpp"
#include "divland/config.hpp"
#include "divland/csv.hpp"
#include "divland/error.hpp"
#include "divland/estimators.hpp"
#include "divland/parallel.hpp"
#include "divland/scenario.hpp"
#include "divland/sweeps.hpp"

using namespace divland;

namespace {

void print_fit(const SweepResult& r, bool gain_spread = true) {
    std::size_t detected = r.rows.size() - r.excluded;
    std::printf("cells: %zu  reached: %zu  excluded: %zu\n", r.rows.size(), detected, r.excluded);
    if (r.fit)
        std::printf("fit: z = %.4f K_z %+.4f  (R^2 = %.4f, n = %zu)\n", r.fit->slope, r.fit->intercept,
                    r.fit->r_squared, r.fit->n);
    else
        std::printf("fit: degenerate (need two distinct gains)\n");
    if (!gain_spread) return;
    for (const auto& [g, s] : r.spread_by_gain())
        if (r.rows.size() > 1) std::printf("  spread at K = %g: %.3f m\n", g, s);
}

std::vector<double> list_or(const ConfigFile& f, const std::string& key, std::vector<double> dflt) {
    if (auto v = f.list(key)) return *v;
    return dflt;
}

Execution exec_of(bool serial) { return serial ? Execution::serial : Execution::parallel; }

} // namespace

int main(int argc, char** argv) {
    apply_thread_env();

    CLI::App app{"Divergence-landing simulation, stability analysis and distance estimation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    bool serial = false;

    auto* sim = app.add_subcommand("simulate", "Run one scenario and write its trace");
    sim->add_option("--config", config_path, "Scenario config file")->required()->check(CLI::ExistingFile);
    sim->add_option("--out", out_path, "Trace CSV path")->required();

    auto* det = app.add_subcommand("sweep-detect", "Fixed-gain detection sweep over gains and winds");
    auto* gust = app.add_subcommand("sweep-gust", "Detection sweep with gusts and actuator losses");
    auto* hov = app.add_subcommand("sweep-hover", "Hover ranging over heights and winds");
    auto* edge = app.add_subcommand("edge-landing", "Landing on the edge of oscillation over start heights");
    std::string rows_path;
    for (auto* sc : {det, gust, hov, edge}) {
        sc->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
        sc->add_option("--out", out_path, "Per-cell CSV path")->required();
        sc->add_flag("--serial", serial, "Use the serial reference kernel");
    }
    edge->add_option("--rows", rows_path, "Optional per-run CSV path");

    double a_z = 1.0, a_T = 0.03, a_vz = 0.0, a_wind = 0.0, a_beta = 0.0, a_delay = 0.0;
    auto* ana = app.add_subcommand("analyze", "Unstable and critical gains at a height");
    ana->add_option("--config", config_path, "Optional [analysis] config")->check(CLI::ExistingFile);
    ana->add_option("--out", out_path, "Optional CSV of closed-loop poles over K");
    ana->add_option("--z", a_z, "Height, m");
    ana->add_option("--T", a_T, "Control period, s");
    ana->add_option("--vz", a_vz, "Vertical velocity at the linearization point, m/s");
    ana->add_option("--wind", a_wind, "Wind at the linearization point, m/s");
    ana->add_option("--beta", a_beta, "rho C_D A / m, 1/m (0 for vacuum)");
    ana->add_option("--delay", a_delay, "Actuation delay for the continuous critical gains, s");

    auto* cur = app.add_subcommand("perfect-curve", "Thrust along perfect constant-divergence landings");
    cur->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    cur->add_option("--out", out_path, "Curve CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (*sim) {
            const ConfigFile f = ConfigFile::load(config_path);
            const ScenarioConfig cfg = load_scenario(f);
            f.reject_unused();
            const ScenarioResult r = run_scenario(cfg);
            write_file(out_path, [&](std::ostream& os) { write_trace_csv(os, r.trace); });
            std::printf("records: %zu  termination: %s\n", r.trace.size(),
                        std::string(to_string(r.termination)).c_str());
            if (auto on = detect_onset(r.trace, cfg.detector))
                std::printf("onset: t = %.3f s  z = %.4f m\n", on->t, on->z);
            else
                std::printf("onset: none\n");
            if (!r.error.empty()) {
                std::fprintf(stderr, "numerical failure: %s\n", r.error.c_str());
                return 2;
            }
            return 0;
        }
        if (*det || *gust) {
            const ConfigFile f = ConfigFile::load(config_path);
            const ScenarioConfig cfg = load_scenario(f, *gust ? gusty_base() : detection_base());
            const auto gains = list_or(f, "sweep.gains", {10, 30, 50});
            const auto winds = list_or(f, "sweep.winds", stepped(-3, 3, 0.5));
            const bool pi = f.flag("sweep.pi_mode").value_or(false);
            f.reject_unused();
            const SweepResult r = detection_sweep(cfg, gains, winds, pi, exec_of(serial));
            write_file(out_path, [&](std::ostream& os) { write_sweep_csv(os, r); });
            print_fit(r);
            return 0;
        }
        if (*hov) {
            const ConfigFile f = ConfigFile::load(config_path);
            const ScenarioConfig cfg = load_scenario(f, hover_base());
            const auto heights = list_or(f, "sweep.heights", stepped(5, 50, 5));
            const auto winds = list_or(f, "sweep.winds", stepped(-3, 3, 1));
            f.reject_unused();
            const SweepResult r = hover_sweep(cfg, heights, winds, exec_of(serial));
            write_file(out_path, [&](std::ostream& os) { write_sweep_csv(os, r); });
            print_fit(r, false);
            // wind robustness: spread of fit residuals over wind for each start height
            if (r.fit) {
                std::map<double, std::pair<double, double>> span;
                for (const auto& row : r.rows) {
                    if (row.outcome != Outcome::detected) continue;
                    const double res = row.z - estimate_z_from_gain(*r.fit, row.k);
                    auto [it, fresh] = span.try_emplace(row.z0, res, res);
                    it->second.first = std::min(it->second.first, res);
                    it->second.second = std::max(it->second.second, res);
                }
                for (const auto& [z0, res] : span)
                    std::printf("  z0 = %g: residual spread over wind %.3f m\n", z0, res.second - res.first);
            }
            return 0;
        }
        if (*edge) {
            const ConfigFile f = ConfigFile::load(config_path);
            const ScenarioConfig cfg = load_scenario(f, edge_base());
            const auto heights = list_or(f, "sweep.heights", stepped(5, 50, 5));
            f.reject_unused();
            const SweepResult r = edge_landing_battery(cfg, heights, exec_of(serial));
            write_file(out_path, [&](std::ostream& os) { write_samples_csv(os, r.samples); });
            if (!rows_path.empty())
                write_file(rows_path, [&](std::ostream& os) { write_sweep_csv(os, r); });
            print_fit(r, false);
            return 0;
        }
        if (*ana) {
            if (!config_path.empty()) {
                const ConfigFile f = ConfigFile::load(config_path);
                f.get("analysis.z", a_z);
                f.get("analysis.T", a_T);
                f.get("analysis.v_z", a_vz);
                f.get("analysis.v_wind", a_wind);
                f.get("analysis.beta", a_beta);
                f.get("analysis.delay", a_delay);
                f.reject_unused();
            }
            std::printf("K_unstable = %.2f\n", unstable_gain_vacuum(a_z, a_T));
            std::printf("K_unstable_horizontal = %.2f\n", unstable_gain_horizontal(a_z, a_T));
            if (a_beta > 0.0) {
                const double p = linear_drag_constant(a_vz, a_wind, a_beta);
                std::printf("p = %.6g\n", p);
                std::printf("K_unstable_drag = %.2f  (simplified %.2f)\n",
                            unstable_gain_drag(a_z, a_vz, p, a_T, false),
                            unstable_gain_drag(a_z, a_vz, p, a_T, true));
                if (a_delay > 0.0) {
                    const auto grid = default_gain_grid(a_z, a_T);
                    const CriticalGains g = continuous_critical_gains(a_z, a_vz, a_wind, a_beta, a_delay, grid);
                    if (g.k_oscillation) std::printf("K_oscillation = %.2f\n", *g.k_oscillation);
                    if (g.k_unstable) std::printf("K_unstable_delay = %.2f\n", *g.k_unstable);
                }
            }
            if (!out_path.empty()) {
                const LinearModel m = a_beta > 0.0 ? zoh_drag_model(a_z, a_vz, a_wind, a_beta, a_T)
                                                   : zoh_vacuum_model(a_z, a_vz, a_T);
                const auto grid = log_grid(0.1, 2.0 * unstable_gain_vacuum(a_z, a_T), 200);
                write_file(out_path, [&](std::ostream& os) {
                    os << "K,re1,im1,re2,im2\n";
                    for (double K : grid) {
                        const auto poles = closed_loop_poles(m, K);
                        os << format_double(K);
                        for (const auto& w : poles) os << ',' << format_double(w.real()) << ',' << format_double(w.imag());
                        os << '\n';
                    }
                });
            }
            return 0;
        }
        if (*cur) {
            const ConfigFile f = ConfigFile::load(config_path);
            VehicleParams v;
            v.drag_coeff_half = 0.5 * 1.204 * 0.25 * 0.25;
            f.get("vehicle.mass", v.mass);
            f.get("vehicle.gravity", v.gravity);
            f.get("vehicle.drag_coeff_half", v.drag_coeff_half);
            double c2 = 0.1, z_max = 10.0, z_step = 0.1;
            f.get("curve.c2", c2);
            f.get("curve.z_max", z_max);
            f.get("curve.z_step", z_step);
            const auto winds = list_or(f, "curve.winds", {-1.0, 0.0, 1.0});
            f.reject_unused();
            v.validate();
            const auto z = stepped(0.0, z_max, z_step);
            std::vector<PerfectLandingCurve> curves;
            for (double w : winds) curves.push_back(perfect_landing_thrust(z, c2, EnvParams{w, 0, 0}, v));
            VehicleParams vac = v;
            vac.drag_coeff_half = 0.0;
            std::vector<std::string> labels;
            for (double w : winds) labels.push_back("wind=" + format_double(w));
            curves.push_back(perfect_landing_thrust(z, c2, EnvParams{}, vac));
            labels.push_back("vacuum");
            write_file(out_path, [&](std::ostream& os) { write_curve_csv(os, labels, curves); });
            for (std::size_t i = 0; i < winds.size(); ++i) {
                const double u0 = curves[i].thrust.front();
                std::printf("wind %+g: touchdown thrust %.4f N reads as still-air height %.3f m\n", winds[i], u0,
                            still_air_height_for_thrust(u0, c2, v));
            }
            return 0;
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    }
    return 0;
}
