#include "salpeter/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "salpeter/error.hpp"

namespace salpeter {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points), dx_(0.0) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw InvalidArgument("grid: interval bounds must be finite");
  }
  if (!(x_max > x_min)) {
    throw InvalidArgument("grid: degenerate interval (x_max must exceed x_min)");
  }
  if (n_points < 4 || !is_power_of_two(n_points)) {
    throw InvalidArgument("grid: n_points must be a power of two >= 4, got " +
                          std::to_string(n_points));
  }
  dx_ = (x_max - x_min) / static_cast<double>(n_points);
}

double Grid1D::dp() const noexcept {
  return 2.0 * std::numbers::pi / (static_cast<double>(n_) * dx_);
}

double Grid1D::nyquist() const noexcept { return std::numbers::pi / dx_; }

double Grid1D::p(std::size_t c) const noexcept {
  return (static_cast<double>(c) - static_cast<double>(n_ / 2)) * dp();
}

std::vector<double> Grid1D::positions() const {
  std::vector<double> xs(n_);
  for (std::size_t j = 0; j < n_; ++j) xs[j] = x(j);
  return xs;
}

std::vector<double> Grid1D::momenta() const {
  std::vector<double> ps(n_);
  for (std::size_t c = 0; c < n_; ++c) ps[c] = p(c);
  return ps;
}

Grid1D make_grid(double x_min, double x_max, std::size_t n_points) {
  return Grid1D(x_min, x_max, n_points);
}

WaveFunction::WaveFunction(Grid1D grid) : grid_(grid), values_(grid.size()) {}

WaveFunction::WaveFunction(Grid1D grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("wave function: value count does not match grid size");
  }
}

double WaveFunction::norm_squared() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return s * grid_.dx();
}

MomentumSpectrum::MomentumSpectrum(Grid1D grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("momentum spectrum: value count does not match grid size");
  }
}

double MomentumSpectrum::norm_squared() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return s * grid_.dp();
}

}  // namespace salpeter
