#pragma once

#include <cstddef>

#include "salpeter/cli/config.hpp"
#include "salpeter/cli/output.hpp"

namespace salpeter::cli {

/// x, rho_born, rho_scalar for the n-th box state, computed on a grid of
/// pad_factor * L and cropped to [-0.5 L, 1.5 L]. Raw values.
Table figure1_table(double box_width, int n, std::size_t grid_points, double pad_factor);

/// x, rho_born, rho_scalar, rho_half for N (sin(pi x/L) + sin(2 pi x/L)).
Table figure2_table(double box_width, std::size_t grid_points, double pad_factor);

/// Rescales every column except x in place.
void normalize_columns(Table& table, Normalization mode);

/// sup |a - b| / sup |b| over the rows.
double relative_sup_deviation(const Table& table, std::size_t a, std::size_t b);

/// Relative standard deviation (std / mean) of column c over x in
/// [0.1 L, 0.9 L].
double central_flatness(const Table& table, std::size_t c, double box_width);

/// min over column pairs of sup |a - b|, divided by the largest value in any
/// density column.
double min_pairwise_separation(const Table& table);

}  // namespace salpeter::cli
