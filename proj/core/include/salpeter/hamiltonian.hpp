#pragma once

#include "salpeter/grid.hpp"

namespace salpeter {

/// Relativistic energy E(p) = sqrt(p^2 + 1).
double energy(double p) noexcept;

/// Applies the square-root Klein-Gordon Hamiltonian as the spectral
/// multiplier E(p).
WaveFunction apply_hamiltonian(const WaveFunction& psi);

/// Number of retained terms in the derivative expansion of the Hamiltonian.
struct SeriesTruncation {
  int k_max = 0;
};

/// Generalized binomial coefficient (1/2 choose k).
double half_binomial(int k) noexcept;

/// Partial sum  sum_{k <= k_max} (1/2 choose k) p^{2k}, the symbol of the
/// truncated derivative series  sum_k (1/2 choose k) (i d/dx)^{2k}.
double series_symbol(double p, SeriesTruncation trunc) noexcept;

/// Fraction of the spectral mass of psi at |p| >= p_cut.
double spectral_mass_above(const WaveFunction& psi, double p_cut);

/// Spectral mass fraction above |p| = 1 tolerated by the series operator.
inline constexpr double kSeriesBandTolerance = 1e-12;

/// Truncated-series Hamiltonian. The series only converges for |p| < 1;
/// throws SeriesDivergence when psi carries more than kSeriesBandTolerance of
/// its mass at |p| >= 1. Modes at |p| >= 1 are projected out.
WaveFunction apply_hamiltonian_series(const WaveFunction& psi, SeriesTruncation trunc);

/// Free evolution exp(-i E(p) t).
WaveFunction evolve_free(const WaveFunction& psi, double t);

// Square-root factors of the pair Lorentz factor and the spinor-lift symbol.
//   d_plus(p)         = sqrt((E + 1) / 2)
//   d_minus_signed(p) = sign(p) sqrt((E - 1) / 2), sign(0) = 0
//   d_vel(p)          = p / (1 + E)
// d_minus_unsigned drops the sign; it is kept only for comparing against the
// unsigned operator form, which does not factor gamma for opposite-sign pairs.
double d_plus(double p) noexcept;
double d_minus_signed(double p) noexcept;
double d_minus_unsigned(double p) noexcept;
double d_vel(double p) noexcept;

enum class DOperator { plus, minus_signed, minus_unsigned, vel };

WaveFunction apply_d_operator(const WaveFunction& psi, DOperator which);

}  // namespace salpeter
