#include "salpeter/dirac.hpp"

#include <algorithm>
#include <cmath>

#include "salpeter/error.hpp"
#include "salpeter/fourier.hpp"
#include "salpeter/hamiltonian.hpp"

namespace salpeter {

DiracField::DiracField(Grid1D grid, std::vector<cplx> upper, std::vector<cplx> lower)
    : grid_(grid), upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.size() != grid_.size() || lower_.size() != grid_.size()) {
    throw InvalidArgument("dirac field: component sizes do not match grid");
  }
}

double DiracField::norm_squared() const {
  double s = 0.0;
  for (std::size_t j = 0; j < upper_.size(); ++j) s += std::norm(upper_[j]) + std::norm(lower_[j]);
  return s * grid_.dx();
}

DiracField lift(const WaveFunction& psi) {
  const WaveFunction lower = apply_d_operator(psi, DOperator::vel);
  return DiracField(psi.grid(), {psi.values().begin(), psi.values().end()},
                    {lower.values().begin(), lower.values().end()});
}

DiracCurrents dirac_current(const DiracField& field) {
  const auto up = field.upper();
  const auto lo = field.lower();
  std::vector<double> rho(up.size());
  std::vector<double> j(up.size());
  for (std::size_t i = 0; i < up.size(); ++i) {
    rho[i] = std::norm(up[i]) + std::norm(lo[i]);
    j[i] = 2.0 * std::real(std::conj(up[i]) * lo[i]);
  }
  return DiracCurrents{DensityField{field.grid(), std::move(rho)},
                       CurrentField{field.grid(), std::move(j)}};
}

namespace {

struct Bins {
  std::vector<cplx> upper;
  std::vector<cplx> lower;
};

Bins forward(const DiracField& f) {
  Bins b{{f.upper().begin(), f.upper().end()}, {f.lower().begin(), f.lower().end()}};
  detail::fft_inplace(b.upper, -1);
  detail::fft_inplace(b.lower, -1);
  return b;
}

// Momentum carried by the odd part of H_D in bin k (zero at Nyquist).
double odd_momentum(const Grid1D& g, std::size_t k) {
  if (k == g.size() / 2) return 0.0;
  return static_cast<double>(detail::fft_frequency(k, g.size())) * g.dp();
}

// |E| of H_D in bin k; the Nyquist bin keeps E(p_N).
double mode_energy(const Grid1D& g, std::size_t k) {
  if (k == g.size() / 2) return energy(g.nyquist());
  return energy(odd_momentum(g, k));
}

}  // namespace

DiracField dirac_evolve(const DiracField& field, double t) {
  const Grid1D& g = field.grid();
  const std::size_t n = g.size();
  Bins b = forward(field);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = odd_momentum(g, k);
    const double e = mode_energy(g, k);
    // beta carries weight 1 per unit E except at Nyquist, where H = E beta.
    const double mass = (k == n / 2) ? e : 1.0;
    const double c = std::cos(e * t);
    const double s = std::sin(e * t) / e;
    const cplx u = b.upper[k];
    const cplx l = b.lower[k];
    const cplx mi(0.0, -1.0);
    b.upper[k] = (c + mi * s * mass) * u + mi * s * p * l;
    b.lower[k] = mi * s * p * u + (c - mi * s * mass) * l;
  }
  detail::fft_inplace(b.upper, +1);
  detail::fft_inplace(b.lower, +1);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    b.upper[j] *= inv_n;
    b.lower[j] *= inv_n;
  }
  return DiracField(g, std::move(b.upper), std::move(b.lower));
}

double negative_energy_mass(const DiracField& field) {
  const Grid1D& g = field.grid();
  const std::size_t n = g.size();
  const Bins b = forward(field);
  double mass = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cplx proj;
    if (k == n / 2) {
      proj = b.lower[k];
    } else {
      // Negative-energy eigenvector of alpha p + beta: (-D, 1) / sqrt(1 + D^2).
      const double d = d_vel(odd_momentum(g, k));
      proj = (-d * b.upper[k] + b.lower[k]) / std::sqrt(1.0 + d * d);
    }
    mass += std::norm(proj);
  }
  return mass * g.dx() / static_cast<double>(n);
}

EquivalenceResiduals equivalence_residuals(const WaveFunction& psi, double t) {
  EquivalenceResiduals r;
  const DiracField lifted = lift(psi);
  const DiracCurrents dc = dirac_current(lifted);
  const DensityField rho = density(psi, SpinHalf{});
  const CurrentField j = current(psi, SpinHalf{});
  for (std::size_t i = 0; i < psi.size(); ++i) {
    r.current = std::max({r.current, std::abs(dc.density.values[i] - rho.values[i]),
                          std::abs(dc.current.values[i] - j.values[i])});
  }
  const DiracField a = dirac_evolve(lifted, t);
  const DiracField b = lift(evolve_free(psi, t));
  for (std::size_t i = 0; i < psi.size(); ++i) {
    r.evolution = std::max({r.evolution, std::abs(a.upper()[i] - b.upper()[i]),
                            std::abs(a.lower()[i] - b.lower()[i])});
  }
  return r;
}

}  // namespace salpeter
