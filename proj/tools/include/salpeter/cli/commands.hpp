#pragma once

#include <string>

#include "salpeter/cli/config.hpp"
#include "salpeter/cli/output.hpp"

namespace salpeter::cli {

struct Report {
  Table table;
  bool passed = true;
  std::string summary;  // human-readable, goes to stderr
};

Report run_figure1(const RunConfig& cfg);
Report run_figure2(const RunConfig& cfg);
Report run_covariance(const RunConfig& cfg);
Report run_continuity(const RunConfig& cfg);
Report run_dirac_check(const RunConfig& cfg);
Report run_series_check(const RunConfig& cfg);

Report run_command(const RunConfig& cfg);

/// Runs the command, writes the CSV (and SVG when requested), and maps
/// failures onto ExitCode values. Messages go to `err`.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: parse, validate, execute.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace salpeter::cli
