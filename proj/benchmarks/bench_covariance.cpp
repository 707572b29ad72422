#include <benchmark/benchmark.h>

#include <random>

#include "salpeter/covariance.hpp"

namespace {

void BM_CovarianceResidual(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> mom(-2.0, 2.0);
  std::vector<salpeter::PlaneWave> terms;
  for (int i = 0; i < state.range(0); ++i) terms.push_back({1.0, mom(rng) + 5.0 * i});
  const salpeter::PlaneWaveSuperposition s(terms);
  const auto events = salpeter::default_events();
  const salpeter::Boost b(0.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(salpeter::covariance_residual(s, salpeter::SpinHalf{}, b, events));
  }
}
BENCHMARK(BM_CovarianceResidual)->DenseRange(2, 8, 3);

}  // namespace
