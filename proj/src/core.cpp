#include "swsplit/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace swsplit {

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::QTra1: return "qtra1";
    case Scheme::QTra2: return "qtra2";
    case Scheme::QTra3: return "qtra3";
  }
  return "unknown";
}

Scheme scheme_from_string(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "qtra1" || lower == "q-tra1") return Scheme::QTra1;
  if (lower == "qtra2" || lower == "q-tra2") return Scheme::QTra2;
  if (lower == "qtra3" || lower == "q-tra3") return Scheme::QTra3;
  throw ConfigError("unknown scheme '" + name + "' (expected qtra1, qtra2 or qtra3)");
}

namespace {

std::string positivity_message(std::size_t cell, double time, double depth) {
  std::ostringstream os;
  os << "negative depth " << depth << " at cell " << cell << ", t = " << time;
  return os.str();
}

}  // namespace

PositivityError::PositivityError(std::size_t cell, double time, double depth)
    : SolverError(positivity_message(cell, time, depth)), cell_(cell), time_(time) {}

Grid make_grid(double x_left, double x_right, std::size_t n_cells) {
  if (n_cells < 2) throw ConfigError("grid needs at least 2 cells");
  if (!(x_right > x_left) || !std::isfinite(x_left) || !std::isfinite(x_right)) {
    throw ConfigError("degenerate domain: x_right must exceed x_left");
  }
  Grid grid;
  grid.n_cells = n_cells;
  grid.x_left = x_left;
  grid.x_right = x_right;
  grid.dx = (x_right - x_left) / static_cast<double>(n_cells);
  grid.cell_centers.resize(n_cells);
  for (std::size_t j = 0; j < n_cells; ++j) {
    grid.cell_centers[j] = x_left + (static_cast<double>(j) + 0.5) * grid.dx;
  }
  return grid;
}

Bathymetry Bathymetry::sample(const Grid& grid, std::function<double(double)> bottom) {
  Bathymetry bathy;
  bathy.b.reserve(grid.n_cells);
  for (double x : grid.cell_centers) bathy.b.push_back(bottom(x));
  bathy.b_pristine = bathy.b;
  bathy.b_analytic = std::move(bottom);
  return bathy;
}

Bathymetry Bathymetry::from_values(std::vector<double> values) {
  Bathymetry bathy;
  bathy.b = values;
  bathy.b_pristine = std::move(values);
  return bathy;
}

double Field::total_mass() const {
  double mass = 0.0;
  for (const auto& s : states) mass += s.h;
  return mass * grid.dx;
}

Field make_field(Grid grid, Bathymetry bathymetry, const std::function<State(double)>& initial,
                 double time) {
  Field field;
  field.states.reserve(grid.n_cells);
  for (double x : grid.cell_centers) field.states.push_back(initial(x));
  field.grid = std::move(grid);
  field.bathymetry = std::move(bathymetry);
  field.time = time;
  validate_field(field);
  return field;
}

void validate_field(const Field& field) {
  if (field.states.size() != field.grid.n_cells || field.bathymetry.b.size() != field.grid.n_cells) {
    throw ConfigError("field arrays do not match the grid size");
  }
  for (std::size_t j = 0; j < field.states.size(); ++j) {
    const State& s = field.states[j];
    if (!(s.h >= 0.0) || !std::isfinite(s.q) || !std::isfinite(s.h + field.bathymetry.b[j])) {
      std::ostringstream os;
      os << "invalid state at cell " << j << ": h = " << s.h << ", q = " << s.q;
      throw ConfigError(os.str());
    }
  }
}

std::vector<double> free_surface(const Field& field) {
  std::vector<double> eta(field.states.size());
  for (std::size_t j = 0; j < eta.size(); ++j) eta[j] = field.states[j].h + field.bathymetry.b[j];
  return eta;
}

void RunConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  if (!(g > 0.0)) throw ConfigError("gravity must be positive");
  if (!(dry_eps > 0.0)) throw ConfigError("dry threshold must be positive");
  if (!(manning_M >= 0.0)) throw ConfigError("Manning coefficient must be nonnegative");
  if (!(t_end >= 0.0)) throw ConfigError("end time must be nonnegative");
  if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end())) {
    throw ConfigError("snapshot times must be sorted ascending");
  }
  for (double t : snapshot_times) {
    if (t < 0.0 || t > t_end) throw ConfigError("snapshot times must lie in [0, t_end]");
  }
}

Physics Physics::from(const RunConfig& config) {
  return Physics{config.g, config.dry_eps, config.sonic_regularization, config.sonic_eps_factor};
}

}  // namespace swsplit
