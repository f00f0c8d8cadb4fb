#include "swsplit/homogeneous.hpp"

#include <algorithm>
#include <cmath>

namespace swsplit {

double next_stop(double time, const RunConfig& config) {
  for (double t : config.snapshot_times) {
    if (t > time) return std::min(t, config.t_end);
  }
  return config.t_end;
}

double cfl_dt(const Field& field, const RunConfig& config) {
  double max_speed = 0.0;
  bool any_wet = false;
  for (const State& s : field.states) {
    if (s.h < config.dry_eps) continue;
    any_wet = true;
    max_speed = std::max(max_speed, std::abs(s.q / s.h) + std::sqrt(config.g * s.h));
  }
  if (!any_wet || !(max_speed > 0.0)) throw NoWaveError("no wet cell to bound the time step");
  const double dt = config.cfl * field.grid.dx / max_speed;
  const double stop = next_stop(field.time, config);
  if (field.time + dt >= stop) return std::max(stop - field.time, 0.0);
  return dt;
}

std::vector<Vec2> interface_fluxes(const Field& field, const Ghosts& ghosts, const RunConfig& config) {
  const Physics physics = Physics::from(config);
  const std::size_t n = field.size();
  auto left_of = [&](std::size_t i) -> const State& { return i == 0 ? ghosts.left : field.states[i - 1]; };
  auto right_of = [&](std::size_t i) -> const State& { return i == n ? ghosts.right : field.states[i]; };

  std::vector<Vec2> fluxes(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    fluxes[i] = config.wet_dry ? numerical_flux_wet_dry(left_of(i), right_of(i), physics)
                               : numerical_flux(left_of(i), right_of(i), physics);
  }
  return fluxes;
}

void enforce_positivity(Field& field) {
  for (std::size_t j = 0; j < field.size(); ++j) {
    State& s = field.states[j];
    if (!std::isfinite(s.h) || !std::isfinite(s.q)) throw PositivityError(j, field.time, s.h);
    if (s.h >= 0.0) continue;
    if (s.h >= -kPositivityTolerance) {
      s = State{0.0, 0.0};
      continue;
    }
    throw PositivityError(j, field.time, s.h);
  }
}

Field apply_conservation(const Field& field, const std::vector<Vec2>& fluxes, double dt) {
  Field next = field;
  const double ratio = dt / field.grid.dx;
  for (std::size_t j = 0; j < field.size(); ++j) {
    const State& w = field.states[j];
    next.states[j] = {w.h - ratio * (fluxes[j + 1][0] - fluxes[j][0]),
                      w.q - ratio * (fluxes[j + 1][1] - fluxes[j][1])};
  }
  next.time = field.time + dt;
  enforce_positivity(next);
  return next;
}

Field homogeneous_step(const Field& field, double dt, const BoundaryCondition& bc, const RunConfig& config) {
  const Ghosts ghosts = fill_ghosts(field, bc, field.time);
  return apply_conservation(field, interface_fluxes(field, ghosts, config), dt);
}

}  // namespace swsplit
