#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swsplit/core.hpp"
#include "swsplit/scenarios.hpp"

namespace swsplit {

/// Absolute tolerance below which a lake-at-rest defect counts as machine zero.
inline constexpr double kExactTolerance = 1e-12;
/// Minimum observed order in dx for an approximate C-property.
inline constexpr double kApproximateOrder = 1.8;
inline constexpr std::size_t kDefaultCPropertySteps = 20;

enum class CPropertyClass { Exact, Approximate, Fails };

std::string to_string(CPropertyClass c);

/// Bottom profile on a domain, used to set up a lake at rest.
struct BottomSpec {
  std::function<double(double)> bottom;
  double x_left = 0.0;
  double x_right = 1.0;
};

/// The bottom shared by the dam-break and stationary problems, on [0, 1].
BottomSpec bump_bottom_spec(BumpProfile bump = BumpProfile::Scaled);

struct CPropertyGridResult {
  std::size_t n_cells = 0;
  double dx = 0.0;
  double max_abs_q = 0.0;
  double max_abs_dh = 0.0;
};

struct CPropertyReport {
  Scheme scheme = Scheme::QTra2;
  std::size_t n_steps = 0;
  std::vector<CPropertyGridResult> grids;
  double max_abs_q = 0.0;   ///< over all grids
  double max_abs_dh = 0.0;  ///< over all grids
  std::optional<double> order_dh;
  std::optional<double> order_q;
  CPropertyClass classification = CPropertyClass::Fails;
};

/// Least-squares slope of log(error) against log(dx).
///
/// Needs at least two entries with strictly decreasing dx (ConfigError
/// otherwise). Returns nullopt when any error is zero or negative.
std::optional<double> convergence_order(const std::vector<std::pair<double, double>>& errors);

/// Runs n_steps full splitting steps from the lake at rest eta = surface_level with
/// walls at both ends, on every grid size, and classifies the defect.
///
/// Exact: max|q| and max|h - h0| <= kExactTolerance on every grid.
/// Approximate: not exact, and both defects are either at machine zero on every
/// grid or decay with observed order >= kApproximateOrder.
CPropertyReport check_c_property(Scheme scheme, const BottomSpec& bottom, double surface_level,
                                 const std::vector<std::size_t>& grid_sizes,
                                 std::size_t n_steps = kDefaultCPropertySteps, const RunConfig& base = {});

struct SchemeDifference {
  Scheme first;
  Scheme second;
  double l1 = 0.0;
  double linf = 0.0;
};

struct SchemeOutcome {
  Scheme scheme;
  Field final_field;
  std::optional<double> analytic_linf;
  std::optional<double> analytic_l1;
};

struct SchemeComparison {
  std::vector<SchemeOutcome> runs;
  std::vector<SchemeDifference> differences;  ///< every unordered pair, in input order
};

/// Surface differences between two fields on the same grid, over cells wet in both.
SchemeDifference surface_difference(const Field& a, const Field& b, double dry_eps = kDefaultDryEps);

/// Runs the scenario once per scheme (config.scheme is overridden) and tabulates
/// pairwise surface differences at t_end.
SchemeComparison compare_schemes(const Scenario& scenario, const std::vector<Scheme>& schemes,
                                 const RunConfig& config);

/// Human-readable table.
std::string to_text(const CPropertyReport& report);
std::string to_text(const SchemeComparison& comparison);
/// One `key=value` per line, for scripts.
std::string to_key_value(const CPropertyReport& report);
std::string to_key_value(const SchemeComparison& comparison);

}  // namespace swsplit
