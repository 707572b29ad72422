#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "salpeter/covariance.hpp"
#include "salpeter/error.hpp"
#include "salpeter/hamiltonian.hpp"

namespace salpeter {
namespace {

TEST(Boost, Construction) {
  EXPECT_EQ(Boost(0.0).gamma(), 1.0);
  EXPECT_NEAR(Boost(0.6).gamma(), 1.25, 1e-15);
  EXPECT_NEAR(Boost(0.6).rapidity(), std::atanh(0.6), 1e-15);
  EXPECT_THROW(Boost(1.0), InvalidArgument);
  EXPECT_THROW(Boost(-1.5), InvalidArgument);
  EXPECT_THROW(Boost(std::nan("")), InvalidArgument);
}

TEST(Boost, Compose) {
  EXPECT_NEAR(compose_boosts(Boost(0.5), Boost(0.5)).velocity(), 0.8, 1e-15);
  EXPECT_NEAR(compose_boosts(Boost(0.3), Boost(-0.3)).velocity(), 0.0, 1e-15);
}

TEST(Boost, MomentumExamples) {
  EXPECT_NEAR(boost_momentum(0.0, Boost(0.6)), -0.75, 1e-15);
  EXPECT_NEAR(boost_momentum(0.75, Boost(0.6)), 0.0, 1e-15);
  const Event e = boost_event({1.0, 0.0}, Boost(0.6));
  EXPECT_NEAR(e.t, 1.25, 1e-15);
  EXPECT_NEAR(e.x, -0.75, 1e-15);
  const auto [j0, j1] = boost_vector(1.0, 0.0, Boost(0.6));
  EXPECT_NEAR(j0, 1.25, 1e-15);
  EXPECT_NEAR(j1, -0.75, 1e-15);
}

TEST(Boost, ChainStaysOnShellAndComposes) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> vel(-0.9, 0.9);
  double p = 0.4;
  Boost total(0.0);
  for (int i = 0; i < 5; ++i) {
    const Boost b(vel(rng));
    p = boost_momentum(p, b);
    total = compose_boosts(total, b);
    const double e = energy(p);
    EXPECT_NEAR(e * e - p * p, 1.0, 1e-10 * e * e);
  }
  EXPECT_NEAR(boost_momentum(0.4, total), p, 1e-10 * energy(p));
}

TEST(Transform, AmplitudeExamples) {
  const PlaneWaveSuperposition s({{cplx(0.0, 2.0), 0.0}});
  const auto scal = transform_amplitudes(s, Boost(0.6), Scalar{});
  EXPECT_NEAR(scal[0].momentum, -0.75, 1e-15);
  EXPECT_NEAR(std::abs(scal[0].amplitude), 2.0, 1e-14);
  EXPECT_NEAR(std::arg(scal[0].amplitude), std::arg(cplx(0.0, 2.0)), 1e-15);

  const auto half = transform_amplitudes(s, Boost(0.6), SpinHalf{});
  EXPECT_NEAR(std::norm(half[0].amplitude) / 4.0, 1.125, 1e-14);

  const auto born = transform_amplitudes(s, Boost(0.6), Born{});
  EXPECT_NEAR(std::norm(born[0].amplitude) / 4.0, 1.25, 1e-14);
}

TEST(Constraint, HoldsForScalarAndSpinHalf) {
  for (int a = 0; a < 20; ++a) {
    for (int c = 0; c < 20; ++c) {
      const double pi = -3.0 + 6.0 * a / 19.0;
      const double pj = -2.9 + 6.0 * c / 19.0;
      for (double v : {-0.9, -0.4, 0.1, 0.5, 0.9}) {
        for (const auto& k : {KernelKind{Scalar{}}, KernelKind{SpinHalf{}}}) {
          const auto r = constraint_report(k, pi, pj, Boost(v));
          EXPECT_LT(r.residual, 1e-10) << to_string(k) << " " << pi << " " << pj << " " << v;
        }
      }
    }
  }
}

TEST(Constraint, BornViolationIsExact) {
  const auto r = constraint_report(Born{}, 0.5, -0.5, Boost(0.5));
  EXPECT_NEAR(r.lhs, 1.0, 1e-15);
  EXPECT_NEAR(r.rhs, 20.0 / 19.0, 1e-14);
  EXPECT_NEAR(r.residual, 1.0 / 19.0, 1e-14);
  EXPECT_THROW(constraint_report(Born{}, 0.5, 0.5, Boost(0.5)), InvalidArgument);
}

TEST(Covariance, ScalarAndSpinHalfExamples) {
  const PlaneWaveSuperposition s({{1.0, 0.5}, {cplx(0.3, 0.9), -1.2}, {0.4, 2.0}});
  const auto ev = default_events();
  ASSERT_EQ(ev.size(), 9u);
  for (double v : {0.0, 0.5, -0.9}) {
    EXPECT_LT(covariance_residual(s, Scalar{}, Boost(v), ev), 1e-10);
    EXPECT_LT(covariance_residual(s, SpinHalf{}, Boost(v), ev), 1e-10);
  }
  EXPECT_LT(covariance_residual(s, Born{}, Boost(0.0), ev), 1e-12);
}

TEST(Covariance, BornFailsEvenAfterRescaling) {
  const PlaneWaveSuperposition s({{1.0, 0.5}, {1.0, -0.5}});
  const auto ev = default_events();
  EXPECT_NEAR(covariance_residual(s, Born{}, Boost(0.5), ev), 0.0585, 1e-3);
  EXPECT_GT(min_residual_over_rescaling(s, Born{}, Boost(0.5), ev, 0.5, 2.0, 21), 1e-2);
  EXPECT_LT(min_residual_over_rescaling(s, Scalar{}, Boost(0.5), ev, 0.5, 2.0, 21), 1e-10);
  EXPECT_THROW(min_residual_over_rescaling(PlaneWaveSuperposition({{1.0, 0.5}}), Born{}, Boost(0.5), ev, 0.5,
                                           2.0, 21),
               InvalidArgument);
}

TEST(Covariance, GlobalPhaseInvariant) {
  const PlaneWaveSuperposition s({{1.0, 0.5}, {cplx(0.3, 0.9), -1.2}});
  const cplx phase = std::polar(1.0, 1.234);
  const PlaneWaveSuperposition r({{phase * 1.0, 0.5}, {phase * cplx(0.3, 0.9), -1.2}});
  const auto ev = default_events();
  const Boost b(0.7);
  for (const auto& k : {KernelKind{Born{}}, KernelKind{Scalar{}}}) {
    EXPECT_NEAR(covariance_residual(s, k, b, ev), covariance_residual(r, k, b, ev), 1e-13);
  }
}

TEST(Covariance, RandomSuperpositions) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> vel(-0.9, 0.9);
  const auto ev = default_events();
  for (int rep = 0; rep < 20; ++rep) {
    const auto s = oracle::random_superposition(2 + rep % 7, 2.0, rng);
    const Boost b(vel(rng));
    EXPECT_LT(covariance_residual(s, Scalar{}, b, ev), 1e-10);
    EXPECT_LT(covariance_residual(s, SpinHalf{}, b, ev), 1e-10);
  }
}

}  // namespace
}  // namespace salpeter
