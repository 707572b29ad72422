#pragma once

#include <vector>

#include "salpeter/grid.hpp"

namespace salpeter {

struct PlaneWave {
  cplx amplitude;
  double momentum;
};

/// Finite sum of positive-energy plane waves,
///   psi(t, x) = sum_i A_i exp(i (p_i x - E(p_i) t)),  E(p) = sqrt(p^2 + 1).
/// Momenta are pairwise distinct (to 1e-12) and there is at least one term.
class PlaneWaveSuperposition {
 public:
  static constexpr double kDistinctTolerance = 1e-12;

  explicit PlaneWaveSuperposition(std::vector<PlaneWave> terms);

  const std::vector<PlaneWave>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const PlaneWave& operator[](std::size_t i) const { return terms_[i]; }

 private:
  std::vector<PlaneWave> terms_;
};

cplx sample_superposition(const PlaneWaveSuperposition& s, double t, double x);

/// Samples the superposition at time t on every grid point.
WaveFunction sample_on_grid(const PlaneWaveSuperposition& s, const Grid1D& grid, double t = 0.0);

/// Minimum ratio of embedding-grid width to box width.
inline constexpr double kMinBoxPadding = 4.0;

/// Grid of width pad * L centered on the box [0, L].
Grid1D box_grid(double box_width, double pad_factor, std::size_t n_points);

/// sqrt(2/L) sin(n pi x / L) on [0, L], zero elsewhere, renormalized so the
/// sampled L2 norm is exactly one.
WaveFunction box_state(double box_width, int n, const Grid1D& grid);

/// N (sin(pi x / L) + sin(2 pi x / L)) on [0, L], zero elsewhere.
WaveFunction superposed_box_state(double box_width, const Grid1D& grid);

/// Normalized Gaussian with momentum spread sigma_p centered at (x0, p0):
///   |phi(p)|^2 ~ exp(-(p - p0)^2 / (2 sigma_p^2)).
/// Throws InvalidArgument if the envelope exceeds 1e-12 of its peak at a grid
/// boundary or at the Nyquist momentum.
WaveFunction gaussian_state(double x0, double p0, double sigma_p, const Grid1D& grid);

}  // namespace salpeter
