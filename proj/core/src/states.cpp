#include "salpeter/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "salpeter/error.hpp"
#include "salpeter/hamiltonian.hpp"

namespace salpeter {

PlaneWaveSuperposition::PlaneWaveSuperposition(std::vector<PlaneWave> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty()) throw InvalidArgument("superposition: at least one term is required");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (!std::isfinite(t.momentum) || !std::isfinite(t.amplitude.real()) ||
        !std::isfinite(t.amplitude.imag())) {
      throw InvalidArgument("superposition: non-finite term " + std::to_string(i));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(terms_[j].momentum - t.momentum) <= kDistinctTolerance) {
        throw InvalidArgument("superposition: momenta of terms " + std::to_string(j) + " and " +
                              std::to_string(i) + " coincide");
      }
    }
  }
}

cplx sample_superposition(const PlaneWaveSuperposition& s, double t, double x) {
  cplx sum = 0.0;
  for (const auto& term : s.terms()) {
    sum += term.amplitude * std::polar(1.0, term.momentum * x - energy(term.momentum) * t);
  }
  return sum;
}

WaveFunction sample_on_grid(const PlaneWaveSuperposition& s, const Grid1D& grid, double t) {
  std::vector<cplx> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) values[j] = sample_superposition(s, t, grid.x(j));
  return WaveFunction(grid, std::move(values));
}

Grid1D box_grid(double box_width, double pad_factor, std::size_t n_points) {
  if (!(box_width > 0.0)) throw InvalidArgument("box_width must be positive");
  if (!(pad_factor >= kMinBoxPadding)) {
    throw InvalidArgument("pad_factor must be >= 4");
  }
  const double half = 0.5 * pad_factor * box_width;
  const double mid = 0.5 * box_width;
  return Grid1D(mid - half, mid + half, n_points);
}

namespace {

void check_box(double box_width, const Grid1D& grid) {
  if (!(box_width > 0.0) || !std::isfinite(box_width)) {
    throw InvalidArgument("box state: box width must be positive");
  }
  if (!(grid.x_min() < 0.0 && grid.x_max() > box_width)) {
    throw InvalidArgument("box state: box [0, L] is not strictly inside the grid");
  }
  if (grid.length() < kMinBoxPadding * box_width * (1.0 - 1e-12)) {
    throw InvalidArgument("box state: insufficient padding (grid must be >= 4x the box width)");
  }
}

template <class Shape>
WaveFunction sampled_box(double box_width, const Grid1D& grid, Shape shape) {
  check_box(box_width, grid);
  std::vector<cplx> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    if (x >= 0.0 && x <= box_width) values[j] = shape(x);
  }
  WaveFunction raw(grid, values);
  const double norm2 = raw.norm_squared();
  if (!(norm2 > 0.0)) throw InvalidArgument("box state: box is narrower than one grid cell");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& v : values) v *= scale;
  return WaveFunction(grid, std::move(values));
}

}  // namespace

WaveFunction box_state(double box_width, int n, const Grid1D& grid) {
  if (n < 1) throw InvalidArgument("box state: quantum number must be >= 1");
  const double k = n * std::numbers::pi / box_width;
  const double amp = std::sqrt(2.0 / box_width);
  return sampled_box(box_width, grid, [&](double x) { return amp * std::sin(k * x); });
}

WaveFunction superposed_box_state(double box_width, const Grid1D& grid) {
  const double k = std::numbers::pi / box_width;
  return sampled_box(box_width, grid,
                     [&](double x) { return std::sin(k * x) + std::sin(2.0 * k * x); });
}

WaveFunction gaussian_state(double x0, double p0, double sigma_p, const Grid1D& grid) {
  if (!(sigma_p > 0.0) || !std::isfinite(sigma_p)) {
    throw InvalidArgument("gaussian: sigma_p must be positive");
  }
  constexpr double kTail = 1e-12;
  const double sigma_x = 0.5 / sigma_p;
  auto envelope_x = [&](double x) {
    const double d = (x - x0) / sigma_x;
    return std::exp(-0.25 * d * d);
  };
  auto envelope_p = [&](double p) {
    const double d = (p - p0) / sigma_p;
    return std::exp(-0.25 * d * d);
  };
  if (envelope_x(grid.x_min()) >= kTail || envelope_x(grid.x_max()) >= kTail) {
    throw InvalidArgument("gaussian: packet leaks past the grid boundary");
  }
  if (envelope_p(grid.nyquist()) >= kTail || envelope_p(-grid.nyquist()) >= kTail) {
    throw InvalidArgument("gaussian: packet leaks past the Nyquist momentum");
  }
  std::vector<cplx> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    values[j] = envelope_x(x) * std::polar(1.0, p0 * x);
  }
  WaveFunction raw(grid, values);
  const double scale = 1.0 / std::sqrt(raw.norm_squared());
  for (auto& v : values) v *= scale;
  return WaveFunction(grid, std::move(values));
}

}  // namespace salpeter
