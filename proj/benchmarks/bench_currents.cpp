#include <benchmark/benchmark.h>

#include <random>

#include "salpeter/currents.hpp"

namespace {

salpeter::WaveFunction noise(std::size_t n) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  std::vector<salpeter::cplx> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return salpeter::WaveFunction(salpeter::Grid1D(-10.0, 10.0, n), std::move(v));
}

// Separated operator form, a few FFTs per call.
void BM_ScalarDensityFast(benchmark::State& state) {
  const auto psi = noise(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(salpeter::density(psi, salpeter::Scalar{}, salpeter::EvalPath::fast));
  }
}
BENCHMARK(BM_ScalarDensityFast)->Arg(256)->Arg(4096);

// Reference double sum, O(N^2) per grid point.
void BM_ScalarDensityGeneric(benchmark::State& state) {
  const auto psi = noise(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(salpeter::density(psi, salpeter::Scalar{}, salpeter::EvalPath::generic));
  }
}
BENCHMARK(BM_ScalarDensityGeneric)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
