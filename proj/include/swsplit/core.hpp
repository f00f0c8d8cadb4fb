#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace swsplit {

/// Conserved variables at one cell: water depth h [m] and discharge per unit width q [m^2/s].
struct State {
  double h = 0.0;
  double q = 0.0;

  friend bool operator==(const State&, const State&) = default;
};

enum class Scheme { QTra1, QTra2, QTra3 };

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A depth-dependent quantity was requested for a dry or negative state.
class DepthDomainError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// An eigenvalue vanished at an interface and sonic regularization is off.
class SonicDegeneracyError : public SolverError {
 public:
  using SolverError::SolverError;
};

class NoWaveError : public SolverError {
 public:
  using SolverError::SolverError;
};

class PositivityError : public SolverError {
 public:
  PositivityError(std::size_t cell, double time, double depth);
  std::size_t cell() const { return cell_; }
  double time() const { return time_; }

 private:
  std::size_t cell_;
  double time_;
};

class BoundaryConsistencyError : public SolverError {
 public:
  using SolverError::SolverError;
};

class FrictionStabilityError : public SolverError {
 public:
  using SolverError::SolverError;
};

class UnsupportedScenarioError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Invalid user input (grid, configuration, command line).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Geometry and fields
// ---------------------------------------------------------------------------

/// Uniform 1D grid; cell j covers [x_left + j dx, x_left + (j+1) dx].
struct Grid {
  std::size_t n_cells = 0;
  double x_left = 0.0;
  double x_right = 0.0;
  double dx = 0.0;
  std::vector<double> cell_centers;
};

Grid make_grid(double x_left, double x_right, std::size_t n_cells);

/// Bottom elevation sampled at cell centers.
///
/// `b` is the bottom the solver sees. `b_pristine` keeps the sampled analytic
/// bottom so that wet/dry redefinitions can always be recomputed from it.
struct Bathymetry {
  std::vector<double> b;
  std::vector<double> b_pristine;
  std::function<double(double)> b_analytic;

  static Bathymetry sample(const Grid& grid, std::function<double(double)> bottom);
  static Bathymetry from_values(std::vector<double> values);

  bool redefined() const { return b != b_pristine; }
};

struct Field {
  Grid grid;
  std::vector<State> states;
  Bathymetry bathymetry;
  double time = 0.0;

  std::size_t size() const { return states.size(); }
  double total_mass() const;
};

/// Builds a field from per-cell initial data; throws ConfigError on invariant violations.
Field make_field(Grid grid, Bathymetry bathymetry, const std::function<State(double)>& initial,
                 double time = 0.0);

/// Checks the cell-wise invariants (h >= 0, finite surface). Throws ConfigError.
void validate_field(const Field& field);

/// Free surface eta_j = h_j + b_j using the solver bottom.
std::vector<double> free_surface(const Field& field);

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

inline constexpr double kDefaultGravity = 9.81;
inline constexpr double kDefaultDryEps = 1e-6;

struct RunConfig {
  Scheme scheme = Scheme::QTra2;
  std::size_t n_cells = 100;
  double cfl = 0.5;
  double g = kDefaultGravity;
  double manning_M = 0.0;
  double dry_eps = kDefaultDryEps;
  double t_end = 0.0;
  std::vector<double> snapshot_times;

  /// Replace sign(lambda) by lambda / max(|lambda|, eps) near critical states.
  bool sonic_regularization = true;
  /// eigen_eps = sonic_eps_factor * sqrt(g * mean depth).
  double sonic_eps_factor = 1e-8;
  /// Bottom redefinition and front discharge zeroing (shoreline problems).
  bool wet_dry = false;

  void validate() const;
};

/// Physical constants and thresholds used by the flux kernels.
struct Physics {
  double g = kDefaultGravity;
  double dry_eps = kDefaultDryEps;
  bool sonic_regularization = true;
  double sonic_eps_factor = 1e-8;

  static Physics from(const RunConfig& config);
};

}  // namespace swsplit
