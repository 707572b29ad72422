#include "salpeter/cli/config.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cmath>
#include <iostream>

#include "salpeter/error.hpp"
#include "salpeter/states.hpp"

namespace salpeter::cli {

double RunConfig::effective_box_width() const {
  if (box_width) return *box_width;
  return command == Command::figure2 ? 0.5 : 1.0;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::figure1: return "figure1";
    case Command::figure2: return "figure2";
    case Command::covariance: return "covariance";
    case Command::continuity: return "continuity";
    case Command::dirac_check: return "dirac-check";
    case Command::series_check: return "series-check";
  }
  return "?";
}

Normalization parse_normalization(const std::string& text) {
  if (text == "raw") return Normalization::raw;
  if (text == "unit-area") return Normalization::unit_area;
  if (text == "peak") return Normalization::peak;
  throw ConfigError("--normalization: expected raw|unit-area|peak, got '" + text + "'");
}

void validate(const RunConfig& cfg) {
  const double width = cfg.effective_box_width();
  if (!std::isfinite(width) || !(width > 0.0)) {
    throw ConfigError("--box-width: must be a positive length");
  }
  if (cfg.state_n < 1) throw ConfigError("--state-n: must be >= 1");
  const auto n = cfg.grid_points;
  if (n < 4 || (n & (n - 1)) != 0) {
    throw ConfigError("--grid-points: must be a power of two >= 4");
  }
  if (!std::isfinite(cfg.pad_factor) || cfg.pad_factor < kMinBoxPadding) {
    throw ConfigError("--pad-factor: must be >= 4");
  }
  if (cfg.velocity && !(std::abs(*cfg.velocity) < 1.0)) {
    throw ConfigError("--velocity: must lie in (-1, 1)");
  }
  if (cfg.emit_svg && cfg.output_path.empty()) {
    throw ConfigError("--svg: requires --out <path>");
  }
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv) {
  CLI::App app{"Salpeter-equation densities, currents and covariance checks", "salpeter"};
  app.require_subcommand(1);

  RunConfig cfg;
  double box_width = 0.0;
  double velocity = 0.0;
  std::string kernel;
  std::string normalization = "raw";

  auto* box_opt = app.add_option("--box-width", box_width, "Box width L in Compton wavelengths");
  app.add_option("--state-n", cfg.state_n, "Box quantum number n");
  app.add_option("--grid-points", cfg.grid_points, "Grid size (power of two)");
  app.add_option("--pad-factor", cfg.pad_factor, "Embedding grid width / box width (>= 4)");
  auto* vel_opt = app.add_option("--velocity", velocity, "Boost velocity in (-1, 1)");
  auto* kernel_opt = app.add_option("--kernel", kernel, "born|scalar|spinhalf|literal:n");
  app.add_option("--out", cfg.output_path, "Output CSV path (default: stdout)");
  app.add_flag("--svg", cfg.emit_svg, "Also write an SVG plot next to --out");
  app.add_option("--normalization", normalization, "raw|unit-area|peak");

  const std::pair<const char*, Command> commands[] = {
      {"figure1", Command::figure1},       {"figure2", Command::figure2},
      {"covariance", Command::covariance}, {"continuity", Command::continuity},
      {"dirac-check", Command::dirac_check}, {"series-check", Command::series_check},
  };
  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, "Run " + std::string(name));
    sub->fallthrough();
    sub->callback([&cfg, cmd = cmd] { cfg.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  if (box_opt->count() > 0) cfg.box_width = box_width;
  if (vel_opt->count() > 0) cfg.velocity = velocity;
  if (kernel_opt->count() > 0) {
    try {
      cfg.kernel = parse_kernel(kernel);
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("--kernel: ") + e.what());
    }
  }
  cfg.normalization = parse_normalization(normalization);
  validate(cfg);
  return cfg;
}

}  // namespace salpeter::cli
