#include <benchmark/benchmark.h>

#include <random>

#include "sesim/engine.hpp"
#include "sesim/reporting.hpp"

namespace {

const sesim::Calibration& reference() {
  static const auto cal = sesim::parse_calibration(SESIM_REFERENCE_DIR);
  return cal;
}

sesim::ScenarioSpec scenario(const std::string& name) {
  return sesim::load_scenario(std::string(SESIM_SCENARIO_DIR) + "/" + name + ".json");
}

const char* const kNames[] = {"bau", "carbon_tax", "redistribution", "wtr", "all_three"};

void BM_SolveOutput(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  sesim::Matrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += a(i, j) = u(rng);
    for (std::size_t i = 0; i < n; ++i) a(i, j) *= 0.6 / col;
  }
  sesim::Vector f(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sesim::solve_output(a, f));
}
BENCHMARK(BM_SolveOutput)->Arg(6)->Arg(24)->Arg(96);

void BM_ParseCalibration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sesim::parse_calibration(SESIM_REFERENCE_DIR));
}
BENCHMARK(BM_ParseCalibration)->Unit(benchmark::kMicrosecond);

void BM_RunScenario(benchmark::State& state) {
  const auto spec = scenario(kNames[state.range(0)]);
  const auto& cal = reference();
  for (auto _ : state) benchmark::DoNotOptimize(sesim::run_scenario(spec, cal));
  state.SetLabel(spec.name);
}
BENCHMARK(BM_RunScenario)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ReferenceBatch(benchmark::State& state) {
  std::vector<sesim::ScenarioSpec> specs;
  for (auto n : kNames) specs.push_back(scenario(n));
  const auto& cal = reference();
  for (auto _ : state) {
    std::vector<sesim::Trajectory> ts;
    for (const auto& s : specs) ts.push_back(sesim::run_scenario(s, cal));
    benchmark::DoNotOptimize(sesim::compare(ts));
  }
}
BENCHMARK(BM_ReferenceBatch)->Unit(benchmark::kMillisecond);

void BM_RenderTimeseries(benchmark::State& state) {
  const auto t = sesim::run_scenario(scenario("all_three"), reference());
  for (auto _ : state)
    benchmark::DoNotOptimize(sesim::render_rows(sesim::timeseries_rows(t), sesim::Format::csv));
}
BENCHMARK(BM_RenderTimeseries)->Unit(benchmark::kMicrosecond);

}  // namespace
