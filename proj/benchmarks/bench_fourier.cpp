#include <benchmark/benchmark.h>

#include <random>

#include "salpeter/fourier.hpp"
#include "salpeter/hamiltonian.hpp"

namespace {

salpeter::WaveFunction noise(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<salpeter::cplx> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return salpeter::WaveFunction(salpeter::Grid1D(-10.0, 10.0, n), std::move(v));
}

void BM_RoundTrip(benchmark::State& state) {
  const auto psi = noise(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(salpeter::to_position(salpeter::to_momentum(psi)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RoundTrip)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_Evolve(benchmark::State& state) {
  const auto psi = noise(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(salpeter::evolve_free(psi, 1.0));
}
BENCHMARK(BM_Evolve)->Arg(4096);

}  // namespace
