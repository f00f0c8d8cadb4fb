#include "swsplit/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace swsplit {

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> values)
    : xs_(std::move(xs)), values_(std::move(values)) {
  if (xs_.size() != values_.size() || xs_.size() < 2) {
    throw ConfigError("piecewise-linear profile needs at least two (x, value) pairs");
  }
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i] > xs_[i - 1])) throw ConfigError("profile abscissae must be strictly increasing");
  }
}

double PiecewiseLinear::operator()(double x) const {
  if (x <= xs_.front()) return values_.front();
  if (x >= xs_.back()) return values_.back();
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

double PiecewiseLinear::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

PiecewiseLinear load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open bottom profile '" + path.string() + "'");
  std::vector<double> xs, bs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    double x = 0.0, b = 0.0;
    if (!(row >> x)) continue;
    if (!(row >> b)) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected two columns 'x b'");
    }
    xs.push_back(x);
    bs.push_back(b);
  }
  return PiecewiseLinear(std::move(xs), std::move(bs));
}

double bump_bottom(double x, BumpProfile profile) {
  if (!(x > 0.4 && x < 0.6)) return 0.0;
  const double offset = profile == BumpProfile::Scaled ? 0.125 : 1.0;
  return 0.125 * std::cos(10.0 * std::numbers::pi * (x - 0.5)) + offset;
}

Field Scenario::initial_field(std::size_t n_cells) const {
  Grid grid = make_grid(x_left, x_right, n_cells);
  Bathymetry bathy = Bathymetry::sample(grid, bottom);
  return make_field(std::move(grid), std::move(bathy), initial);
}

RunConfig Scenario::default_config(Scheme scheme) const {
  RunConfig config;
  config.scheme = scheme;
  config.n_cells = default_cells;
  config.cfl = default_cfl;
  config.t_end = t_end;
  config.manning_M = manning_M.value_or(0.0);
  config.wet_dry = wet_dry;
  config.snapshot_times = default_snapshots;
  return config;
}

namespace {

Scenario bump_scenario(BumpProfile bump) {
  Scenario s;
  s.x_left = 0.0;
  s.x_right = 1.0;
  s.bottom = [bump](double x) { return bump_bottom(x, bump); };
  s.bc = BoundaryCondition::walls();
  return s;
}

}  // namespace

Scenario test1_dam_break(BumpProfile bump) {
  Scenario s = bump_scenario(bump);
  s.name = "test1_dam_break";
  s.initial = [bump](double x) {
    const double level = x < 0.5 ? 1.0 : 0.5;
    return State{std::max(level - bump_bottom(x, bump), 0.0), 0.0};
  };
  s.t_end = 0.5;
  s.default_cells = 200;
  s.default_cfl = 0.5;
  s.default_snapshots = {s.t_end};
  return s;
}

Scenario test2_stationary(BumpProfile bump) {
  Scenario s = bump_scenario(bump);
  s.name = "test2_stationary";
  s.initial = [bump](double x) { return State{std::max(1.0 - bump_bottom(x, bump), 0.0), 0.0}; };
  s.t_end = 0.25;
  s.default_cells = 50;
  s.default_cfl = 0.5;
  s.default_snapshots = {s.t_end};
  s.analytic_surface = [](double, double) { return 1.0; };
  return s;
}

double tidal_forcing(double t) {
  return 4.0 + 4.0 * std::sin(std::numbers::pi * (4.0 * t / 86400.0 - 0.5));
}

PiecewiseLinear tidal_standin_bottom() {
  // Irregular stand-in: shelf, ridge with a steep crest, trough, slope back to 0.
  // Keep in sync with data/tidal_standin_bottom.txt.
  return PiecewiseLinear(
      {0, 50, 100, 150, 250, 300, 350, 400, 425, 435, 450, 470, 475, 500, 505,
       530, 550, 565, 575, 600, 650, 700, 750, 800, 820, 900, 950, 1000, 1500},
      {0.0, 0.0, 2.2, 4.4, 4.4, 2.6, 4.4, 4.4, 6.6, 7.0, 7.9, 7.9, 8.0, 7.9, 7.9,
       5.3, 4.8, 4.8, 4.4, 3.5, 2.6, 2.6, 2.0, 1.8, 1.1, 0.35, 0.0, 0.0, 0.0});
}

Scenario test3_tidal_wave(std::optional<PiecewiseLinear> bottom) {
  constexpr double kRestLevel = 16.0;
  PiecewiseLinear profile = bottom ? std::move(*bottom) : tidal_standin_bottom();
  if (!(profile.max_value() < kRestLevel)) {
    throw ConfigError("tidal bottom must stay below the rest level of 16 m");
  }
  Scenario s;
  s.name = "test3_tidal_wave";
  s.x_left = 0.0;
  s.x_right = 1500.0;
  s.bottom = [profile](double x) { return profile(x); };
  s.initial = [profile](double x) { return State{kRestLevel - profile(x), 0.0}; };
  s.bc = {PrescribedDepth{[](double t) { return kRestLevel + tidal_forcing(t); }}, Wall{}};
  s.t_end = 10800.0;
  s.default_cells = 100;
  s.default_cfl = 0.9;
  s.default_snapshots = {2700.0, 5400.0, 8100.0, 10800.0};
  s.analytic_surface = [](double, double t) { return kRestLevel + tidal_forcing(t); };
  return s;
}

double shoreline_bottom(double x) {
  if (x <= 3.0) return 0.00125 * x + 0.0125;
  return 0.162 * (x - 3.0) + 0.01625;
}

Scenario test4_shoreline_friction() {
  constexpr double kRestLevel = 0.4;
  Scenario s;
  s.name = "test4_shoreline_friction";
  s.x_left = 0.0;
  s.x_right = 6.0;
  s.bottom = shoreline_bottom;
  s.initial = [](double x) { return State{std::max(kRestLevel - shoreline_bottom(x), 0.0), 0.0}; };
  s.bc = {PrescribedDischarge{[](double) { return 0.8; }, 0.0, 0.2}, Wall{}};
  s.t_end = 5.0;
  s.default_cells = 250;
  s.default_cfl = 0.5;
  s.manning_M = 0.015;
  s.wet_dry = true;
  s.default_snapshots = {1.0, 2.0, 3.0, 4.0, 5.0};
  return s;
}

Scenario scenario_by_number(int number, BumpProfile bump, std::optional<PiecewiseLinear> tidal_bottom) {
  switch (number) {
    case 1: return test1_dam_break(bump);
    case 2: return test2_stationary(bump);
    case 3: return test3_tidal_wave(std::move(tidal_bottom));
    case 4: return test4_shoreline_friction();
    default: throw ConfigError("unknown test " + std::to_string(number) + " (expected 1-4)");
  }
}

double analytic_error(const Field& field, const Scenario& scenario, Norm norm, double dry_eps) {
  if (!scenario.has_reference()) {
    throw UnsupportedScenarioError("scenario '" + scenario.name + "' has no analytic reference");
  }
  const auto& b = field.bathymetry.b_pristine.empty() ? field.bathymetry.b : field.bathymetry.b_pristine;
  double result = 0.0;
  for (std::size_t j = 0; j < field.size(); ++j) {
    const State& s = field.states[j];
    if (s.h < dry_eps) continue;
    const double err = std::abs(s.h + b[j] - scenario.analytic_surface(field.grid.cell_centers[j], field.time));
    result = norm == Norm::Linf ? std::max(result, err) : result + err * field.grid.dx;
  }
  return result;
}

}  // namespace swsplit
