#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swsplit/boundary.hpp"
#include "swsplit/core.hpp"

namespace swsplit {

/// Continuous piecewise-linear profile through (x, value) knots, constant beyond the ends.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  PiecewiseLinear(std::vector<double> xs, std::vector<double> values);

  double operator()(double x) const;
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& values() const { return values_; }
  double max_value() const;

 private:
  std::vector<double> xs_;
  std::vector<double> values_;
};

/// Reads a two-column "x b" text profile; blank lines and '#' comments are skipped.
PiecewiseLinear load_profile(const std::filesystem::path& path);

/// Bump variants for the dam-break and stationary problems.
enum class BumpProfile {
  /// (1/8) cos(10 pi (x - 1/2)) + 1/8 on (2/5, 3/5): continuous, peak 0.25.
  Scaled,
  /// (1/8) cos(10 pi (x - 1/2)) + 1 on (2/5, 3/5): peak 1.125, dries the bump.
  Literal,
};

double bump_bottom(double x, BumpProfile profile);

struct Scenario {
  std::string name;
  double x_left = 0.0;
  double x_right = 1.0;
  std::function<double(double)> bottom;
  std::function<State(double)> initial;
  BoundaryCondition bc;
  double t_end = 0.0;
  std::size_t default_cells = 100;
  double default_cfl = 0.5;
  std::optional<double> manning_M;
  bool wet_dry = false;
  std::vector<double> default_snapshots;
  /// Reference free-surface elevation (x, t) -> eta, when one is known.
  std::function<double(double, double)> analytic_surface;

  bool has_reference() const { return static_cast<bool>(analytic_surface); }
  Field initial_field(std::size_t n_cells) const;
  /// Scenario defaults for the given scheme (cells, cfl, t_end, friction, wet/dry).
  RunConfig default_config(Scheme scheme) const;
};

Scenario test1_dam_break(BumpProfile bump = BumpProfile::Scaled);
Scenario test2_stationary(BumpProfile bump = BumpProfile::Scaled);

/// Tidal forcing phi(t) = 4 + 4 sin(pi (4 t / 86400 - 1/2)).
double tidal_forcing(double t);

/// Built-in irregular stand-in bathymetry on [0, 1500] (peak 8 m, b(0) = 0).
PiecewiseLinear tidal_standin_bottom();

/// Tidal wave over irregular topography; `bottom` defaults to tidal_standin_bottom().
Scenario test3_tidal_wave(std::optional<PiecewiseLinear> bottom = std::nullopt);

double shoreline_bottom(double x);
Scenario test4_shoreline_friction();

/// Scenario 1..4; throws ConfigError otherwise.
Scenario scenario_by_number(int number, BumpProfile bump = BumpProfile::Scaled,
                            std::optional<PiecewiseLinear> tidal_bottom = std::nullopt);

enum class Norm { Linf, L1 };

/// Norm of (h + b_pristine - reference surface) over wet cells at field.time.
/// Throws UnsupportedScenarioError when the scenario has no reference.
double analytic_error(const Field& field, const Scenario& scenario, Norm norm,
                      double dry_eps = kDefaultDryEps);

}  // namespace swsplit
