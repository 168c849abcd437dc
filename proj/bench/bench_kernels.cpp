#include <benchmark/benchmark.h>

#include <vector>

#include "divland/analysis.hpp"
#include "divland/sweeps.hpp"

using namespace divland;

namespace {

Execution exec_of(const benchmark::State& state) {
    return state.range(0) ? Execution::parallel : Execution::serial;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "openmp" : "serial"); }

void BM_DetectionSweep(benchmark::State& state) {
    ScenarioConfig b = detection_base();
    b.noise_sigma = 1e-6;
    const std::vector<double> gains{10, 30, 50};
    const auto winds = stepped(-3, 3, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(detection_sweep(b, gains, winds, false, exec_of(state)));
    label(state);
}

void BM_HoverSweep(benchmark::State& state) {
    ScenarioConfig b = hover_base();
    b.noise_sigma = 1e-6;
    const auto heights = stepped(5, 50, 5);
    const auto winds = stepped(-3, 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(hover_sweep(b, heights, winds, exec_of(state)));
    label(state);
}

void BM_EdgeBattery(benchmark::State& state) {
    ScenarioConfig b = edge_base();
    b.noise_sigma = 1e-6;
    b.edge.trigger_cov = 0.05;
    const auto heights = stepped(5, 50, 5);
    for (auto _ : state) benchmark::DoNotOptimize(edge_landing_battery(b, heights, exec_of(state)));
    label(state);
}

void BM_ScanGains(benchmark::State& state) {
    const auto model = continuous_drag_model(10, -0.1, 0, 1);
    const auto grid = log_grid(0.1, 1e4, 20000);
    for (auto _ : state) benchmark::DoNotOptimize(scan_gains(model, 0.15, grid, exec_of(state)));
    label(state);
}

} // namespace

BENCHMARK(BM_DetectionSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HoverSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EdgeBattery)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanGains)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
