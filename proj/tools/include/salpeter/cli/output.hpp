#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace salpeter::cli {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Column-major table of doubles plus an optional leading text column.
struct Table {
  std::vector<std::string> header;
  std::vector<std::string> labels;  // one per row when non-empty; becomes column 0
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? labels.size() : columns.front().size(); }
};

/// Shortest round-trippable text for a double, fixed at 17 significant digits.
std::string format_double(double v);

std::string to_csv(const Table& table);

/// Line plot: first numeric column on the x axis, one polyline per remaining
/// column, legend from the header.
std::string to_svg(const Table& table, const std::string& title);

/// Writes via a temporary file and rename so no partial file is left behind.
/// Throws IoError.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace salpeter::cli
