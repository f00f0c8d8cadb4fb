#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "swsplit/io.hpp"
#include "swsplit/simulation.hpp"
#include "swsplit/verify.hpp"

namespace swsplit::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    parts.push_back(first == std::string::npos ? std::string() : item.substr(first, last - first + 1));
  }
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::string time_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& part : split_commas(text)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ConfigError("malformed number '" + part + "' in list '" + text + "'");
    }
    if (used != part.size()) throw ConfigError("malformed number '" + part + "' in list '" + text + "'");
    values.push_back(v);
  }
  if (values.empty()) throw ConfigError("empty list");
  return values;
}

std::vector<std::size_t> parse_count_list(const std::string& text) {
  std::vector<std::size_t> counts;
  for (const std::string& part : split_commas(text)) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ConfigError("malformed count '" + part + "' in list '" + text + "'");
    }
    counts.push_back(std::stoul(part));
  }
  if (counts.empty()) throw ConfigError("empty list");
  return counts;
}

RunSetup resolve_run(const RunOptions& options) {
  if (options.test < 1 || options.test > 4) throw ConfigError("--test must be 1, 2, 3 or 4");
  if (options.scheme.empty()) throw ConfigError("--scheme is required");
  const Scheme scheme = scheme_from_string(options.scheme);
  if (options.paper_literal_bump && options.test > 2) {
    throw ConfigError("--paper-literal-bump only applies to tests 1 and 2");
  }
  if (!options.bottom_file.empty() && options.test != 3) {
    throw ConfigError("--bottom-file only applies to test 3");
  }

  std::optional<PiecewiseLinear> tidal_bottom;
  if (!options.bottom_file.empty()) tidal_bottom = load_profile(options.bottom_file);
  const BumpProfile bump = options.paper_literal_bump ? BumpProfile::Literal : BumpProfile::Scaled;

  RunSetup setup{scenario_by_number(options.test, bump, std::move(tidal_bottom)), {}, options.test, options.out};
  RunConfig& config = setup.config;
  config = setup.scenario.default_config(scheme);

  if (scheme == Scheme::QTra3 && !setup.scenario.manning_M && !options.manning) {
    throw ConfigError("qtra3 on a frictionless scenario needs an explicit --manning (e.g. --manning 0)");
  }
  if (scheme != Scheme::QTra3 && setup.scenario.wet_dry) {
    throw ConfigError(to_string(scheme) + " cannot run a wet/dry scenario; use qtra3");
  }
  if (options.manning && scheme != Scheme::QTra3) {
    throw ConfigError("--manning only applies to qtra3");
  }

  if (options.cells) {
    if (*options.cells < 2) throw ConfigError("--cells must be at least 2");
    config.n_cells = *options.cells;
  }
  if (options.cfl) {
    if (!(*options.cfl > 0.0 && *options.cfl <= 1.0)) throw ConfigError("--cfl must lie in (0, 1]");
    config.cfl = *options.cfl;
  }
  if (options.manning) config.manning_M = *options.manning;
  if (options.t_end) config.t_end = *options.t_end;

  if (!options.snapshots.empty()) {
    config.snapshot_times = parse_number_list(options.snapshots);
    std::sort(config.snapshot_times.begin(), config.snapshot_times.end());
  } else {
    std::erase_if(config.snapshot_times, [&](double t) { return t > config.t_end; });
  }
  if (config.snapshot_times.empty() || config.snapshot_times.back() != config.t_end) {
    config.snapshot_times.push_back(config.t_end);
  }
  config.validate();
  return setup;
}

namespace {

int execute_run(const RunSetup& setup, std::ostream& out) {
  std::filesystem::create_directories(setup.out_dir);
  const std::string stem = "test" + std::to_string(setup.test) + "_" + to_string(setup.config.scheme);
  const bool b_eff = setup.config.wet_dry;
  auto sink = [&](const Field& field) {
    const auto path = setup.out_dir / (stem + "_t" + time_label(field.time) + ".csv");
    write_snapshot_csv(field, path, b_eff);
    out << "wrote " << path.string() << '\n';
  };
  const SimulationSummary summary = run_simulation(setup.scenario, setup.config, sink);
  out << "scenario=" << setup.scenario.name << '\n'
      << "scheme=" << to_string(setup.config.scheme) << '\n'
      << "cells=" << setup.config.n_cells << '\n'
      << "steps=" << summary.steps << '\n'
      << "t_end=" << summary.final_field.time << '\n'
      << "min_depth=" << summary.min_depth << '\n'
      << "max_abs_q=" << summary.max_abs_q << '\n'
      << "initial_mass=" << summary.initial_mass << '\n'
      << "final_mass=" << summary.final_mass << '\n'
      << "boundary_inflow=" << summary.boundary_inflow << '\n';
  if (setup.scenario.has_reference()) {
    out << "analytic_linf=" << analytic_error(summary.final_field, setup.scenario, Norm::Linf) << '\n';
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string scheme = "qtra2";
  std::string grids = "50,100,200";
  std::size_t steps = kDefaultCPropertySteps;
  double surface = 1.0;
  double cfl = 0.5;
  std::optional<double> manning;
  bool key_value = false;
  bool paper_literal_bump = false;
};

int execute_c_property(const VerifyOptions& opts, std::ostream& out) {
  const Scheme scheme = scheme_from_string(opts.scheme);
  const std::vector<std::size_t> grids = parse_count_list(opts.grids);
  RunConfig base;
  if (!(opts.cfl > 0.0 && opts.cfl <= 1.0)) throw ConfigError("--cfl must lie in (0, 1]");
  base.cfl = opts.cfl;
  base.manning_M = opts.manning.value_or(0.0);
  const BottomSpec bottom =
      bump_bottom_spec(opts.paper_literal_bump ? BumpProfile::Literal : BumpProfile::Scaled);
  const CPropertyReport report = check_c_property(scheme, bottom, opts.surface, grids, opts.steps, base);
  out << (opts.key_value ? to_key_value(report) : to_text(report));
  const CPropertyClass expected = scheme == Scheme::QTra1 ? CPropertyClass::Approximate : CPropertyClass::Exact;
  return report.classification == expected ? kExitOk : kExitSolverFailure;
}

struct CompareOptions {
  int test = 2;
  std::string schemes = "qtra1,qtra2";
  std::optional<std::size_t> cells;
  std::optional<double> cfl;
  std::optional<double> t_end;
  bool key_value = false;
};

int execute_compare(const CompareOptions& opts, std::ostream& out) {
  std::vector<Scheme> schemes;
  for (const std::string& name : split_commas(opts.schemes)) schemes.push_back(scheme_from_string(name));
  if (schemes.empty()) throw ConfigError("--schemes is empty");
  RunOptions run;
  run.test = opts.test;
  run.scheme = to_string(schemes.front());
  run.cells = opts.cells;
  run.cfl = opts.cfl;
  run.t_end = opts.t_end;
  if (std::find(schemes.begin(), schemes.end(), Scheme::QTra3) != schemes.end() && opts.test != 4) {
    throw ConfigError("qtra3 comparisons are only supported on test 4");
  }
  const RunSetup setup = resolve_run(run);
  const SchemeComparison cmp = compare_schemes(setup.scenario, schemes, setup.config);
  out << (opts.key_value ? to_key_value(cmp) : to_text(cmp));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"1D shallow water solver with Q-scheme time splitting (qtra1, qtra2, qtra3)", "swsplit"};
  app.set_config("--config", "", "Flat key=value file; keys are flag names without the leading dashes");

  RunOptions run;
  app.add_option("--test", run.test, "Benchmark problem 1-4");
  app.add_option("--scheme", run.scheme, "qtra1 | qtra2 | qtra3");
  app.add_option("--cells", run.cells, "Number of cells (default: scenario)");
  app.add_option("--cfl", run.cfl, "CFL number in (0, 1]");
  app.add_option("--t-end", run.t_end, "End time in seconds");
  app.add_option("--snapshots", run.snapshots, "Comma-separated output times");
  app.add_option("--manning", run.manning, "Manning coefficient (qtra3)");
  app.add_option("--out", run.out, "Output directory for CSV snapshots");
  app.add_option("--bottom-file", run.bottom_file, "Two-column 'x b' bottom profile (test 3)");
  app.add_flag("--paper-literal-bump", run.paper_literal_bump, "Use the unscaled bump bottom (tests 1-2)");

  auto* verify = app.add_subcommand("verify", "Verification harness");
  verify->require_subcommand(1);

  VerifyOptions vopts;
  auto* cprop = verify->add_subcommand("c-property", "Lake-at-rest C-property check");
  cprop->add_option("--scheme", vopts.scheme, "qtra1 | qtra2 | qtra3");
  cprop->add_option("--grids", vopts.grids, "Comma-separated cell counts");
  cprop->add_option("--steps", vopts.steps, "Splitting steps per grid");
  cprop->add_option("--surface", vopts.surface, "Lake surface level in meters");
  cprop->add_option("--cfl", vopts.cfl, "CFL number");
  cprop->add_option("--manning", vopts.manning, "Manning coefficient (qtra3)");
  cprop->add_flag("--kv", vopts.key_value, "key=value output");
  cprop->add_flag("--paper-literal-bump", vopts.paper_literal_bump, "Use the unscaled bump bottom");

  CompareOptions copts;
  auto* compare = verify->add_subcommand("compare", "Pairwise scheme comparison at t_end");
  compare->add_option("--test", copts.test, "Benchmark problem 1-4");
  compare->add_option("--schemes", copts.schemes, "Comma-separated schemes");
  compare->add_option("--cells", copts.cells, "Number of cells");
  compare->add_option("--cfl", copts.cfl, "CFL number");
  compare->add_option("--t-end", copts.t_end, "End time");
  compare->add_flag("--kv", copts.key_value, "key=value output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (cprop->parsed()) return execute_c_property(vopts, out);
    if (compare->parsed()) return execute_compare(copts, out);
    return execute_run(resolve_run(run), out);
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return kExitSolverFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolverFailure;
  }
}

}  // namespace swsplit::cli
