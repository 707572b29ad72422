#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "salpeter/error.hpp"
#include "salpeter/hamiltonian.hpp"
#include "salpeter/kernels.hpp"

namespace salpeter {
namespace {

TEST(PairVelocity, Examples) {
  EXPECT_EQ(u_pair(0.0, 0.0), 0.0);
  EXPECT_EQ(u_pair(0.5, -0.5), 0.0);
  EXPECT_NEAR(u_pair(0.75, 0.75), 0.6, 1e-15);
  EXPECT_LT(std::abs(u_pair(10.0, 20.0)), 1.0);
  EXPECT_GT(u_pair(10.0, 20.0), 0.99);
}

TEST(PairGamma, Examples) {
  EXPECT_NEAR(gamma_pair(0.3, -0.3), 1.0, 1e-15);
  EXPECT_EQ(gamma_pair_minus_one(0.3, -0.3), 0.0);
  EXPECT_NEAR(gamma_pair(0.75, 0.75), 1.25, 1e-15);
  // gamma = 1 / sqrt(1 - u^2)
  for (double p1 : {-2.0, -0.1, 0.4, 3.0}) {
    for (double p2 : {-1.5, 0.0, 0.9}) {
      const double u = u_pair(p1, p2);
      EXPECT_NEAR(gamma_pair(p1, p2), 1.0 / std::sqrt(1.0 - u * u), 1e-12);
      EXPECT_NEAR(gamma_pair_minus_one(p1, p2), gamma_pair(p1, p2) - 1.0, 1e-14);
      EXPECT_GE(gamma_pair(p1, p2), 1.0);
    }
  }
  // Near-cancellation stays accurate.
  EXPECT_NEAR(gamma_pair_minus_one(1.0 + 1e-9, -1.0) / 1e-18, 0.0625, 1e-6);
}

TEST(PairGamma, MatchesSeparatedFactors) {
  for (double p1 : {0.5, -0.5, 2.0}) {
    for (double p2 : {1.0, -1.0, 0.25}) {
      const double sep = d_plus(p1) * d_plus(p2) + d_minus_signed(p1) * d_minus_signed(p2);
      EXPECT_NEAR(gamma_pair(p1, p2), sep, 1e-14);
      const double sep_u = d_plus(p1) * d_minus_signed(p2) + d_minus_signed(p1) * d_plus(p2);
      EXPECT_NEAR(gamma_pair(p1, p2) * u_pair(p1, p2), sep_u, 1e-14);
    }
  }
}

TEST(Kernels, DiagonalValues) {
  for (double p : {-3.0, 0.0, 0.5, 2.0}) {
    const double e = energy(p);
    EXPECT_EQ(kernel_value(Born{}, p, p), 1.0);
    EXPECT_NEAR(kernel_value(Scalar{}, p, p), e, 1e-14);
    EXPECT_NEAR(kernel_value(SpinHalf{}, p, p), 2.0 * e / (1.0 + e), 1e-14);
    EXPECT_NEAR(current_kernel_value(Scalar{}, p, p), p, 1e-14);
    EXPECT_NEAR(current_kernel_value(Born{}, p, p), p / e, 1e-14);
  }
}

TEST(Kernels, SpinHalfIdentity) {
  // (1 + D1 D2) u = D1 + D2
  for (double p1 : {-1.2, 0.0, 0.7}) {
    for (double p2 : {-0.4, 2.5}) {
      EXPECT_NEAR(current_kernel_value(SpinHalf{}, p1, p2), d_vel(p1) + d_vel(p2), 1e-14);
    }
  }
}

TEST(Kernels, Symmetric) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  const KernelKind kinds[] = {Born{}, Scalar{}, SpinHalf{}, LiteralHalfInteger{1}};
  for (int i = 0; i < 50; ++i) {
    const double a = d(rng), b = d(rng);
    for (const auto& k : kinds) {
      EXPECT_DOUBLE_EQ(kernel_value(k, a, b), kernel_value(k, b, a));
      EXPECT_DOUBLE_EQ(current_kernel_value(k, a, b), current_kernel_value(k, b, a));
    }
  }
}

TEST(Kernels, LiteralFamily) {
  EXPECT_DOUBLE_EQ(kernel_value(LiteralHalfInteger{0}, 0.5, 1.0), gamma_pair(0.5, 1.0));
  EXPECT_NO_THROW(kernel_value(LiteralHalfInteger{0}, 0.5, -0.5));
  EXPECT_THROW(kernel_value(LiteralHalfInteger{1}, 0.5, -0.5), DomainError);
  EXPECT_THROW(kernel_value(LiteralHalfInteger{1}, 0.0, 0.0), DomainError);
  const double g = gamma_pair(0.5, 1.0);
  EXPECT_NEAR(kernel_value(LiteralHalfInteger{2}, 0.5, 1.0), g / ((g - 1) * (g - 1)), 1e-12 * g);
  // Does not reproduce the spin-1/2 kernel.
  EXPECT_GT(std::abs(kernel_value(LiteralHalfInteger{1}, 0.5, 0.5) - kernel_value(SpinHalf{}, 0.5, 0.5)),
            1e-3);
}

TEST(Kernels, Parse) {
  EXPECT_TRUE(std::holds_alternative<Born>(parse_kernel("born")));
  EXPECT_TRUE(std::holds_alternative<Scalar>(parse_kernel("scalar")));
  EXPECT_TRUE(std::holds_alternative<SpinHalf>(parse_kernel("spinhalf")));
  const auto lit = parse_kernel("literal:3");
  ASSERT_TRUE(std::holds_alternative<LiteralHalfInteger>(lit));
  EXPECT_EQ(std::get<LiteralHalfInteger>(lit).n, 3);
  for (const char* bad : {"", "Born", "literal", "literal:", "literal:-1", "literal:x", "vector"}) {
    EXPECT_THROW(parse_kernel(bad), InvalidArgument) << bad;
  }
  for (const char* s : {"born", "scalar", "spinhalf", "literal:2"}) EXPECT_EQ(to_string(parse_kernel(s)), s);
}

}  // namespace
}  // namespace salpeter
