#include "salpeter/hamiltonian.hpp"

#include <cmath>

#include "salpeter/error.hpp"
#include "salpeter/fourier.hpp"

namespace salpeter {

double energy(double p) noexcept { return std::hypot(p, 1.0); }

WaveFunction apply_hamiltonian(const WaveFunction& psi) {
  return apply_multiplier(psi, [](double p) { return cplx(energy(p)); });
}

double half_binomial(int k) noexcept {
  double c = 1.0;
  for (int i = 0; i < k; ++i) c *= (0.5 - i) / (i + 1);
  return c;
}

double series_symbol(double p, SeriesTruncation trunc) noexcept {
  const double p2 = p * p;
  double term_coeff = 1.0;
  double power = 1.0;
  double sum = 0.0;
  for (int k = 0; k <= trunc.k_max; ++k) {
    sum += term_coeff * power;
    term_coeff *= (0.5 - k) / (k + 1);
    power *= p2;
  }
  return sum;
}

double spectral_mass_above(const WaveFunction& psi, double p_cut) {
  const MomentumSpectrum phi = to_momentum(psi);
  double total = 0.0;
  double above = 0.0;
  for (std::size_t c = 0; c < phi.size(); ++c) {
    const double w = std::norm(phi[c]);
    total += w;
    if (std::abs(phi.grid().p(c)) >= p_cut) above += w;
  }
  return total > 0.0 ? above / total : 0.0;
}

WaveFunction apply_hamiltonian_series(const WaveFunction& psi, SeriesTruncation trunc) {
  if (trunc.k_max < 0) throw InvalidArgument("series truncation: k_max must be >= 0");
  const double leak = spectral_mass_above(psi, 1.0);
  if (leak > kSeriesBandTolerance) {
    throw SeriesDivergence("series Hamiltonian: spectral mass fraction " + std::to_string(leak) +
                           " at |p| >= 1 lies outside the radius of convergence");
  }
  // Outside the band the polynomial grows like p^{2 k_max}; applying it to
  // rounding-level content there would swamp the result.
  return apply_multiplier(psi, [trunc](double p) {
    return std::abs(p) < 1.0 ? cplx(series_symbol(p, trunc)) : cplx(0.0);
  });
}

WaveFunction evolve_free(const WaveFunction& psi, double t) {
  return apply_multiplier(psi, [t](double p) { return std::polar(1.0, -energy(p) * t); });
}

double d_plus(double p) noexcept { return std::sqrt(0.5 * (energy(p) + 1.0)); }

// E - 1 = p^2 / (E + 1) avoids cancellation near p = 0 and carries the sign.
double d_minus_signed(double p) noexcept { return p / std::sqrt(2.0 * (energy(p) + 1.0)); }

double d_minus_unsigned(double p) noexcept { return std::abs(d_minus_signed(p)); }

double d_vel(double p) noexcept { return p / (1.0 + energy(p)); }

WaveFunction apply_d_operator(const WaveFunction& psi, DOperator which) {
  switch (which) {
    case DOperator::plus:
      return apply_multiplier(psi, [](double p) { return cplx(d_plus(p)); });
    case DOperator::minus_signed:
      return apply_multiplier(psi, [](double p) { return cplx(d_minus_signed(p)); });
    case DOperator::minus_unsigned:
      return apply_multiplier(psi, [](double p) { return cplx(d_minus_unsigned(p)); });
    case DOperator::vel:
      return apply_multiplier(psi, [](double p) { return cplx(d_vel(p)); });
  }
  throw InvalidArgument("apply_d_operator: unknown operator");
}

}  // namespace salpeter
