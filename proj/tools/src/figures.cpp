#include "salpeter/cli/figures.hpp"

#include <algorithm>
#include <cmath>

#include "salpeter/currents.hpp"
#include "salpeter/states.hpp"

namespace salpeter::cli {

namespace {

Table crop(const Grid1D& grid, double box_width, std::vector<std::string> header,
           const std::vector<const std::vector<double>*>& fields) {
  Table t;
  t.header = std::move(header);
  t.columns.resize(fields.size() + 1);
  const double lo = -0.5 * box_width;
  const double hi = 1.5 * box_width;
  const double slack = 1e-9 * box_width;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    if (x < lo - slack || x > hi + slack) continue;
    t.columns[0].push_back(x);
    for (std::size_t f = 0; f < fields.size(); ++f) t.columns[f + 1].push_back((*fields[f])[j]);
  }
  return t;
}

}  // namespace

Table figure1_table(double box_width, int n, std::size_t grid_points, double pad_factor) {
  const Grid1D grid = box_grid(box_width, pad_factor, grid_points);
  const WaveFunction psi = box_state(box_width, n, grid);
  const auto born = density(psi, Born{});
  const auto scalar = density(psi, Scalar{});
  return crop(grid, box_width, {"x", "rho_born", "rho_scalar"}, {&born.values, &scalar.values});
}

Table figure2_table(double box_width, std::size_t grid_points, double pad_factor) {
  const Grid1D grid = box_grid(box_width, pad_factor, grid_points);
  const WaveFunction psi = superposed_box_state(box_width, grid);
  const auto born = density(psi, Born{});
  const auto scalar = density(psi, Scalar{});
  const auto half = density(psi, SpinHalf{});
  return crop(grid, box_width, {"x", "rho_born", "rho_scalar", "rho_half"},
              {&born.values, &scalar.values, &half.values});
}

void normalize_columns(Table& table, Normalization mode) {
  if (mode == Normalization::raw || table.columns.size() < 2) return;
  const auto& xs = table.columns.front();
  const double dx = xs.size() > 1 ? xs[1] - xs[0] : 1.0;
  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    auto& col = table.columns[c];
    double scale = 0.0;
    if (mode == Normalization::unit_area) {
      for (double v : col) scale += v;
      scale *= dx;
    } else {
      for (double v : col) scale = std::max(scale, std::abs(v));
    }
    if (scale > 0.0) {
      for (double& v : col) v /= scale;
    }
  }
}

double relative_sup_deviation(const Table& table, std::size_t a, std::size_t b) {
  double diff = 0.0;
  double peak = 0.0;
  const auto& ca = table.columns.at(a);
  const auto& cb = table.columns.at(b);
  for (std::size_t r = 0; r < ca.size(); ++r) {
    diff = std::max(diff, std::abs(ca[r] - cb[r]));
    peak = std::max(peak, std::abs(cb[r]));
  }
  return diff / peak;
}

double central_flatness(const Table& table, std::size_t c, double box_width) {
  const auto& xs = table.columns.front();
  const auto& col = table.columns.at(c);
  double sum = 0.0;
  double sum2 = 0.0;
  std::size_t count = 0;
  for (std::size_t r = 0; r < xs.size(); ++r) {
    if (xs[r] < 0.1 * box_width || xs[r] > 0.9 * box_width) continue;
    sum += col[r];
    sum2 += col[r] * col[r];
    ++count;
  }
  const double mean = sum / static_cast<double>(count);
  const double var = std::max(0.0, sum2 / static_cast<double>(count) - mean * mean);
  return std::sqrt(var) / mean;
}

double min_pairwise_separation(const Table& table) {
  double peak = 0.0;
  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    for (double v : table.columns[c]) peak = std::max(peak, std::abs(v));
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 1; a < table.columns.size(); ++a) {
    for (std::size_t b = a + 1; b < table.columns.size(); ++b) {
      double d = 0.0;
      for (std::size_t r = 0; r < table.columns[a].size(); ++r) {
        d = std::max(d, std::abs(table.columns[a][r] - table.columns[b][r]));
      }
      best = std::min(best, d);
    }
  }
  return best / peak;
}

}  // namespace salpeter::cli
