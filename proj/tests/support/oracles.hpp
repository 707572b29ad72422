#pragma once

// Reference computations for tests. Everything here is written directly from
// the defining sums, in long double, without FFTs or the library's mode
// bookkeeping, so it can check those independently.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "salpeter/grid.hpp"
#include "salpeter/states.hpp"

namespace salpeter::oracle {

using lcplx = std::complex<long double>;

/// phi(p_c) = (2 pi)^{-1/2} sum_j psi(x_j) exp(-i p_c x_j) dx, O(N^2).
inline std::vector<cplx> naive_to_momentum(const WaveFunction& psi) {
  const Grid1D& g = psi.grid();
  const std::size_t n = g.size();
  std::vector<cplx> phi(n);
  const long double scale = g.dx() / std::sqrt(2.0L * std::numbers::pi_v<long double>);
  for (std::size_t c = 0; c < n; ++c) {
    lcplx acc = 0.0L;
    const long double p = g.p(c);
    for (std::size_t j = 0; j < n; ++j) {
      const long double phase = -p * static_cast<long double>(g.x(j));
      acc += lcplx(psi[j].real(), psi[j].imag()) * lcplx(std::cos(phase), std::sin(phase));
    }
    acc *= scale;
    phi[c] = cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return phi;
}

/// Direct discretization of the kernel double integral
///   rho(x_j) = dp^2 / (2 pi) sum_{a,b} K(p_a, p_b) conj(phi_a) phi_b exp(i (p_b - p_a) x_j),
/// over the centered lattice. Only meaningful for states without Nyquist
/// content (the lattice has -p_N but not +p_N).
inline std::vector<double> naive_bilinear(const WaveFunction& psi,
                                          const std::function<double(double, double)>& kernel) {
  const Grid1D& g = psi.grid();
  const std::size_t n = g.size();
  const auto phi = naive_to_momentum(psi);
  const long double pref = static_cast<long double>(g.dp()) * g.dp() /
                           (2.0L * std::numbers::pi_v<long double>);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const long double x = g.x(j);
    std::vector<lcplx> b(n);
    for (std::size_t c = 0; c < n; ++c) {
      const long double ph = static_cast<long double>(g.p(c)) * x;
      b[c] = lcplx(phi[c].real(), phi[c].imag()) * lcplx(std::cos(ph), std::sin(ph));
    }
    long double acc = 0.0L;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        acc += kernel(g.p(a), g.p(c)) * std::real(std::conj(b[a]) * b[c]);
      }
    }
    out[j] = static_cast<double>(pref * acc);
  }
  return out;
}

/// Midpoint rule on [a, b] with m cells.
inline double midpoint_integral(const std::function<double(double)>& f, double a, double b,
                                int m) {
  const double h = (b - a) / m;
  double s = 0.0;
  for (int i = 0; i < m; ++i) s += f(a + (i + 0.5) * h);
  return s * h;
}

/// Complex white noise on every grid point.
inline WaveFunction random_state(const Grid1D& g, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<cplx> v(g.size());
  for (auto& z : v) z = cplx(gauss(rng), gauss(rng));
  return WaveFunction(g, std::move(v));
}

/// Random combination of the lattice modes with |p| <= p_max.
inline WaveFunction band_limited_state(const Grid1D& g, double p_max, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<PlaneWave> terms;
  const int kmax = static_cast<int>(std::floor(p_max / g.dp() + 1e-9));
  for (int k = -kmax; k <= kmax; ++k) terms.push_back({cplx(gauss(rng), gauss(rng)), k * g.dp()});
  return sample_on_grid(PlaneWaveSuperposition(std::move(terms)), g);
}

/// n_terms plane waves with distinct momenta in [-p_max, p_max] and
/// amplitudes of modulus in [0.2, 1.5].
inline PlaneWaveSuperposition random_superposition(std::size_t n_terms, double p_max,
                                                   std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mom(-p_max, p_max);
  std::uniform_real_distribution<double> mag(0.2, 1.5);
  std::uniform_real_distribution<double> arg(-std::numbers::pi, std::numbers::pi);
  std::vector<PlaneWave> terms;
  while (terms.size() < n_terms) {
    const double p = mom(rng);
    bool clash = false;
    for (const auto& t : terms) clash = clash || std::abs(t.momentum - p) < 1e-6;
    if (!clash) terms.push_back({std::polar(mag(rng), arg(rng)), p});
  }
  return PlaneWaveSuperposition(std::move(terms));
}

inline double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double sup_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double sup_abs(std::span<const cplx> a) {
  double m = 0.0;
  for (const auto& z : a) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace salpeter::oracle
