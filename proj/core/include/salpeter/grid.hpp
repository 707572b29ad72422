#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace salpeter {

using cplx = std::complex<double>;

// Natural units throughout: hbar = c = m = 1. Lengths are in Compton
// wavelengths, momenta in mc, energies in mc^2.

/// Uniform periodic sampling of [x_min, x_max) and its dual momentum lattice.
///
/// Sample j sits at x_min + j*dx. The momentum lattice is centered: index c
/// maps to p = (c - n/2) * dp with dp = 2*pi / (n*dx), so the most negative
/// entry is the Nyquist momentum -pi/dx.
class Grid1D {
 public:
  /// Throws InvalidArgument for a degenerate interval or a size that is not
  /// a power of two >= 4.
  Grid1D(double x_min, double x_max, std::size_t n_points);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double dx() const noexcept { return dx_; }
  double dp() const noexcept;
  double length() const noexcept { return x_max_ - x_min_; }
  double nyquist() const noexcept;

  double x(std::size_t j) const noexcept { return x_min_ + static_cast<double>(j) * dx_; }
  /// Momentum at centered index c in [0, n).
  double p(std::size_t c) const noexcept;

  std::vector<double> positions() const;
  std::vector<double> momenta() const;

  bool operator==(const Grid1D&) const = default;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double dx_;
};

Grid1D make_grid(double x_min, double x_max, std::size_t n_points);

/// Complex field sampled on a grid (position representation).
class WaveFunction {
 public:
  explicit WaveFunction(Grid1D grid);
  WaveFunction(Grid1D grid, std::vector<cplx> values);

  const Grid1D& grid() const noexcept { return grid_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const cplx& operator[](std::size_t j) const { return values_[j]; }

  /// Riemann sum  sum_j |psi_j|^2 dx.
  double norm_squared() const;

 private:
  Grid1D grid_;
  std::vector<cplx> values_;
};

/// Momentum-space amplitudes on the centered lattice of a grid.
class MomentumSpectrum {
 public:
  MomentumSpectrum(Grid1D grid, std::vector<cplx> values);

  const Grid1D& grid() const noexcept { return grid_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const cplx& operator[](std::size_t c) const { return values_[c]; }

  /// sum_c |phi_c|^2 dp.
  double norm_squared() const;

 private:
  Grid1D grid_;
  std::vector<cplx> values_;
};

}  // namespace salpeter
