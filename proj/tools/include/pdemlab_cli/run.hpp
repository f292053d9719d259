#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "pdemlab_cli/config.hpp"
#include "pdemlab_cli/report.hpp"

namespace pdemlab::cli {

inline constexpr int kExitSuccess = 0;

/// Threshold for the truncation warning on weighted densities.
inline constexpr double kTruncationWarning = 1e-12;

struct RunResult {
  int exit_status = kExitSuccess;
  KeyValueReport report;
  std::vector<std::filesystem::path> files;  // every file written, report.kv last
};

/// Executes one pipeline stage and writes report.kv plus its tables into
/// config.output_dir. Failures are reported, not thrown: the report carries
/// status=error, error.code, error.stage and error.message and the exit
/// status is 2 (validation), 3 (numerical) or 4 (NonNormalizable).
RunResult run(const RunConfig& config, std::ostream& log);

/// Parses argv with CLI11 and calls run(). Usage errors exit with 2.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdemlab::cli
