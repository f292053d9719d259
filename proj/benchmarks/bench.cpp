#include <cmath>

#include <benchmark/benchmark.h>

#include "pdemlab/ladder.hpp"
#include "pdemlab/lattice.hpp"
#include "pdemlab/metric.hpp"
#include "pdemlab/oracles.hpp"
#include "pdemlab/states.hpp"
#include "pdemlab/susy.hpp"

using namespace pdemlab;

namespace {

Profile oscillator(double beta2) {
  return make_profile(constant_mass(1.0), harmonic_potential(1.0, 2.0 * std::sqrt(beta2)), {-1.0, beta2, 1.0});
}

Profile rational() {
  return make_profile(rational_mass(1.0, 1.0), harmonic_potential(1.0, 1.0), {-1.0, 1.0, 1.0});
}

GridSpec grid_of(const benchmark::State& state) { return GridSpec(8.0, static_cast<std::size_t>(state.range(0))); }

void BM_BuildLadder(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const Profile p = rational();
  for (auto _ : state) benchmark::DoNotOptimize(build_ladder(p, g));
}
BENCHMARK(BM_BuildLadder)->Arg(801)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_RiccatiK(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const Profile p = rational();
  const EffectiveFields f = effective_fields(p, g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_K_riccati(f, p, 0.0, 0.0, g));
}
BENCHMARK(BM_RiccatiK)->Arg(801)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_CoherentState(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const Profile p = oscillator(0.5);
  const LadderPackage pkg = build_ladder(p, g);
  const MetricWeight w = build_metric(p, g);
  for (auto _ : state) {
    const CoherentState s = coherent_state(pkg, {0.6, -0.3}, w, Convention::eta);
    benchmark::DoNotOptimize(variance_report(s, pkg, w));
  }
}
BENCHMARK(BM_CoherentState)->Arg(801)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_DiscretizeH(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const Profile p = oscillator(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(discretize_H(p, g));
}
BENCHMARK(BM_DiscretizeH)->Arg(801)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_Matvec(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const LatticeOperator H = discretize_H(oscillator(0.5), g);
  const ComplexField psi = test_function_basket(g, 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(matvec(H, psi));
}
BENCHMARK(BM_Matvec)->Arg(801)->Arg(2001)->Unit(benchmark::kMicrosecond);

void BM_Spectrum(benchmark::State& state) {
  const LatticeOperator H = discretize_H(oscillator(0.5), grid_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_reality(H, 10));
}
BENCHMARK(BM_Spectrum)->Arg(401)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
