#include "salpeter/cli/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace salpeter::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out += ',';
    out += table.header[c];
  }
  out += '\n';
  const bool labelled = !table.labels.empty();
  for (std::size_t r = 0; r < table.rows(); ++r) {
    bool first = true;
    if (labelled) {
      out += table.labels[r];
      first = false;
    }
    for (const auto& col : table.columns) {
      if (!first) out += ',';
      out += format_double(col[r]);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string to_svg(const Table& table, const std::string& title) {
  constexpr double kWidth = 800.0, kHeight = 500.0, kMargin = 60.0;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  const std::size_t offset = table.labels.empty() ? 0 : 1;
  if (table.columns.size() < 2) return {};
  const auto& xs = table.columns.front();
  double x_lo = *std::min_element(xs.begin(), xs.end());
  double x_hi = *std::max_element(xs.begin(), xs.end());
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -y_lo;
  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    for (double v : table.columns[c]) {
      if (!std::isfinite(v)) continue;
      y_lo = std::min(y_lo, v);
      y_hi = std::max(y_hi, v);
    }
  }
  y_lo = std::min(y_lo, 0.0);
  if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;
  if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
  auto sx = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); };
  auto sy = [&](double y) {
    return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin);
  };

  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
      << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kMargin / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << title << "</text>\n";
  svg << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin / 3
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << x_lo << "</text>\n";
  svg << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin / 3
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << x_hi
      << "</text>\n";
  svg << "<text x=\"" << kMargin - 5 << "\" y=\"" << kMargin
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << y_hi
      << "</text>\n";
  svg << "<text x=\"" << kMargin - 5 << "\" y=\"" << kHeight - kMargin
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << y_lo
      << "</text>\n";
  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    const char* color = kColors[(c - 1) % std::size(kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    const auto& ys = table.columns[c];
    for (std::size_t r = 0; r < ys.size(); ++r) {
      if (!std::isfinite(ys[r])) continue;
      svg << sx(xs[r]) << ',' << sy(ys[r]) << ' ';
    }
    svg << "\"/>\n";
    const double ly = kMargin + 18.0 * static_cast<double>(c);
    svg << "<line x1=\"" << kWidth - kMargin - 150 << "\" y1=\"" << ly << "\" x2=\""
        << kWidth - kMargin - 120 << "\" y2=\"" << ly << "\" stroke=\"" << color << "\"/>\n";
    svg << "<text x=\"" << kWidth - kMargin - 115 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << table.header[c + offset]
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + tmp.string() + "' for writing");
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into '" + path + "'");
  }
}

}  // namespace salpeter::cli
