#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "swsplit/core.hpp"
#include "swsplit/scenarios.hpp"

namespace swsplit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverFailure = 1;
inline constexpr int kExitUsage = 2;

/// Flags of the run command as typed by the user, before scenario defaults are applied.
struct RunOptions {
  int test = 0;
  std::string scheme;
  std::optional<std::size_t> cells;
  std::optional<double> cfl;
  std::optional<double> t_end;
  std::optional<double> manning;
  std::string snapshots;
  std::string out = ".";
  std::string bottom_file;
  bool paper_literal_bump = false;
};

struct RunSetup {
  Scenario scenario;
  RunConfig config;
  int test = 0;
  std::filesystem::path out_dir;
};

/// Comma-separated list of numbers; throws ConfigError on malformed input.
std::vector<double> parse_number_list(const std::string& text);
std::vector<std::size_t> parse_count_list(const std::string& text);

/// Applies scenario defaults, then the user's overrides, and validates the result.
/// Throws ConfigError (a usage error) for unknown tests/schemes, out-of-range values,
/// and scheme/scenario mismatches.
RunSetup resolve_run(const RunOptions& options);

/// Full command line driver; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swsplit::cli
