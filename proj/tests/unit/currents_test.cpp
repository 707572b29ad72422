#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "salpeter/currents.hpp"
#include "salpeter/error.hpp"
#include "salpeter/hamiltonian.hpp"

namespace salpeter {
namespace {

const KernelKind kFastKinds[] = {Born{}, Scalar{}, SpinHalf{}};

TEST(ModeExpansion, ReconstructsSamples) {
  std::mt19937_64 rng(2);
  const Grid1D g(-3.0, 5.0, 32);
  const WaveFunction psi = oracle::random_state(g, rng);
  const ModeExpansion m = mode_expansion(psi);
  ASSERT_EQ(m.momenta.size(), g.size() + 1);
  for (std::size_t j = 0; j < g.size(); ++j) {
    cplx s = 0;
    for (std::size_t k = 0; k < m.momenta.size(); ++k) s += m.amplitudes[k] * std::polar(1.0, m.momenta[k] * g.x(j));
    EXPECT_NEAR(std::abs(s - psi[j]), 0.0, 1e-12);
  }
}

TEST(Density, FastMatchesGeneric) {
  std::mt19937_64 rng(12);
  const Grid1D g(-6.0, 6.0, 64);
  for (int rep = 0; rep < 3; ++rep) {
    const WaveFunction psi = oracle::random_state(g, rng);
    for (const auto& k : kFastKinds) {
      const auto fast = density(psi, k, EvalPath::fast).values;
      const auto slow = density(psi, k, EvalPath::generic).values;
      EXPECT_LT(oracle::sup_diff(fast, slow), 1e-10 * *std::max_element(slow.begin(), slow.end()))
          << to_string(k);
      const auto jf = current(psi, k, EvalPath::fast).values;
      const auto js = current(psi, k, EvalPath::generic).values;
      EXPECT_LT(oracle::sup_diff(jf, js), 1e-10 * *std::max_element(slow.begin(), slow.end()))
          << to_string(k);
    }
  }
}

TEST(Density, MatchesDirectDoubleIntegral) {
  std::mt19937_64 rng(13);
  const Grid1D g(-4.0, 4.0, 32);
  const WaveFunction psi = oracle::band_limited_state(g, 8.0, rng);
  for (const auto& k : kFastKinds) {
    const auto ours = density(psi, k).values;
    const auto ref = oracle::naive_bilinear(psi, [&](double a, double b) { return kernel_value(k, a, b); });
    EXPECT_LT(oracle::sup_diff(ours, ref), 1e-10 * *std::max_element(ref.begin(), ref.end())) << to_string(k);
  }
}

TEST(Density, PlaneWaves) {
  const Grid1D g(0.0, 12.0, 64);
  const double p = 4 * g.dp();
  const cplx a(0.6, -0.8);
  const WaveFunction psi = sample_on_grid(PlaneWaveSuperposition({{a, p}}), g);
  const double e = energy(p);
  const double na = std::norm(a);
  for (std::size_t j = 0; j < g.size(); j += 7) {
    EXPECT_NEAR(density(psi, Born{}).values[j], na, 1e-13);
    EXPECT_NEAR(density(psi, Scalar{}).values[j], e * na, 1e-13);
    EXPECT_NEAR(density(psi, SpinHalf{}).values[j], 2 * e / (1 + e) * na, 1e-13);
    EXPECT_NEAR(current(psi, Born{}).values[j], p / e * na, 1e-13);
    EXPECT_NEAR(current(psi, Scalar{}).values[j], p * na, 1e-13);
    EXPECT_NEAR(current(psi, SpinHalf{}).values[j], 2 * d_vel(p) * na, 1e-13);
  }
}

TEST(Current, VanishesForRealStates) {
  const Grid1D g = box_grid(1.0, 4.0, 256);
  const WaveFunction psi = superposed_box_state(1.0, g);
  for (const auto& k : kFastKinds) {
    const auto j = current(psi, k).values;
    EXPECT_LT(*std::max_element(j.begin(), j.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }),
              1e-12);
  }
}

TEST(FourCurrent, AgreesWithGridEvaluation) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> gauss;
  const Grid1D g(-10.0, 10.0, 128);
  std::vector<PlaneWave> terms;
  for (int k : {-9, -2, 0, 5, 11}) terms.push_back({cplx(gauss(rng), gauss(rng)), k * g.dp()});
  const PlaneWaveSuperposition s(terms);
  const WaveFunction psi = sample_on_grid(s, g);
  for (const auto& k : kFastKinds) {
    const auto rho = density(psi, k).values;
    const auto cur = current(psi, k).values;
    for (std::size_t j = 0; j < g.size(); j += 5) {
      const auto f = fourcurrent_planewaves(s, k, 0.0, g.x(j));
      EXPECT_NEAR(f.j0, rho[j], 1e-10);
      EXPECT_NEAR(f.j1, cur[j], 1e-10);
      EXPECT_LT(f.imag0, 1e-12);
      EXPECT_LT(f.imag1, 1e-12);
    }
  }
}

TEST(Continuity, SmallResidualOnBoxState) {
  const Grid1D g = box_grid(1.0, 4.0, 4096);
  const WaveFunction psi = box_state(1.0, 1, g);
  EXPECT_LT(continuity_residual(psi, SpinHalf{}, 1e-4), 1e-6);
  EXPECT_THROW(continuity_residual(psi, SpinHalf{}, 0.0), InvalidArgument);
}

TEST(Continuity, ResidualIsSecondOrderInTimeStep) {
  const Grid1D g(0.0, 8.0, 64);
  const double dp = g.dp();
  const WaveFunction psi =
      sample_on_grid(PlaneWaveSuperposition({{1.0, 3 * dp}, {cplx(0.7, 0.2), -9 * dp}, {0.5, 6 * dp}}), g);
  for (const auto& k : kFastKinds) {
    const double r1 = continuity_residual(psi, k, 1e-3);
    const double r2 = continuity_residual(psi, k, 5e-4);
    EXPECT_NEAR(r1 / r2, 4.0, 0.1) << to_string(k);
  }
}

TEST(Normalization, ScalarPacketScalesByEnergy) {
  const Grid1D g(-400.0, 400.0, 4096);
  const WaveFunction psi = gaussian_state(0.0, 2.0, 0.02, g);
  const WaveFunction n = normalize_for_kernel(psi, Scalar{});
  EXPECT_NEAR(density(n, Scalar{}).integral(), 1.0, 1e-12);
  EXPECT_NEAR(std::sqrt(n.norm_squared()), 1.0 / std::sqrt(energy(2.0)), 1e-3);
  const WaveFunction twice = normalize_for_kernel(n, Scalar{});
  EXPECT_LT(oracle::sup_diff(twice.values(), n.values()), 1e-14);
  EXPECT_THROW(normalize_for_kernel(WaveFunction(g), Scalar{}), InvalidArgument);
}

TEST(Density, NonRelativisticLimit) {
  const Grid1D g(-1024.0, 1024.0, 4096);
  const WaveFunction psi = gaussian_state(0.0, 0.0, 0.01, g);
  const auto born = density(psi, Born{}).values;
  const auto scal = density(psi, Scalar{}).values;
  const double peak = *std::max_element(born.begin(), born.end());
  EXPECT_LT(oracle::sup_diff(born, scal) / peak, 1e-3);
}

TEST(Density, PositiveForRandomStates) {
  std::mt19937_64 rng(77);
  const Grid1D g(-8.0, 8.0, 256);
  for (int rep = 0; rep < 5; ++rep) {
    const WaveFunction psi = oracle::random_state(g, rng);
    for (const auto& k : {KernelKind{Scalar{}}, KernelKind{SpinHalf{}}}) {
      const auto rho = density(psi, k).values;
      EXPECT_GE(*std::min_element(rho.begin(), rho.end()), -1e-10);
    }
  }
}

TEST(Density, TotalConservedUnderEvolution) {
  std::mt19937_64 rng(78);
  const WaveFunction psi = oracle::random_state(Grid1D(-8.0, 8.0, 128), rng);
  for (const auto& k : kFastKinds) {
    const double before = density(psi, k).integral();
    const double after = density(evolve_free(psi, 3.3), k).integral();
    EXPECT_NEAR(after, before, 1e-10 * before) << to_string(k);
  }
}

TEST(Density, UnsignedFormDiffersForMixedSigns) {
  const Grid1D g(0.0, 12.0, 64);
  const WaveFunction psi = sample_on_grid(PlaneWaveSuperposition({{1.0, 3 * g.dp()}, {1.0, -5 * g.dp()}}), g);
  EXPECT_GT(oracle::sup_diff(unsigned_separated_density(psi).values, density(psi, Scalar{}).values), 1e-3);
  const WaveFunction same = sample_on_grid(PlaneWaveSuperposition({{1.0, 3 * g.dp()}, {1.0, 5 * g.dp()}}), g);
  EXPECT_LT(oracle::sup_diff(unsigned_separated_density(same).values, density(same, Scalar{}).values), 1e-12);
}

TEST(Density, LiteralKernelIsSingular) {
  const Grid1D g(0.0, 12.0, 16);
  const WaveFunction psi = sample_on_grid(PlaneWaveSuperposition({{1.0, g.dp()}}), g);
  EXPECT_THROW(density(psi, LiteralHalfInteger{1}), DomainError);
  EXPECT_NO_THROW(density(psi, LiteralHalfInteger{0}));
}

}  // namespace
}  // namespace salpeter
