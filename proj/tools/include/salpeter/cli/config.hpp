#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "salpeter/kernels.hpp"

namespace salpeter::cli {

enum class Command { figure1, figure2, covariance, continuity, dirac_check, series_check };
enum class Normalization { raw, unit_area, peak };

struct RunConfig {
  Command command = Command::figure1;
  std::optional<double> box_width;  // default depends on the command
  int state_n = 2;
  std::size_t grid_points = 4096;
  double pad_factor = 4.0;
  std::optional<double> velocity;
  std::optional<KernelKind> kernel;
  std::string output_path;  // empty: stdout
  bool emit_svg = false;
  Normalization normalization = Normalization::raw;

  double effective_box_width() const;
};

/// Exit statuses of the `salpeter` executable.
enum ExitCode : int { kOk = 0, kThresholdViolation = 1, kInvalidConfig = 2, kIoError = 3 };

/// Thrown for malformed or out-of-range flags; the message names the flag.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses argv into a validated RunConfig. Throws ConfigError. Returns
/// std::nullopt when help was requested (text already printed).
std::optional<RunConfig> parse_args(int argc, const char* const* argv);

/// Checks every module precondition the command will rely on.
void validate(const RunConfig& cfg);

std::string command_name(Command c);
Normalization parse_normalization(const std::string& text);

}  // namespace salpeter::cli
