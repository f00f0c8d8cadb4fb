#pragma once

#include <vector>

#include "swsplit/boundary.hpp"
#include "swsplit/core.hpp"
#include "swsplit/flux.hpp"

namespace swsplit {

/// Roundoff band for negative depths; anything below it is a positivity failure.
inline constexpr double kPositivityTolerance = 1e-12;

/// First time after `time` at which the run must stop: the next snapshot or t_end.
double next_stop(double time, const RunConfig& config);

/// dt = cfl * dx / max_j(|u_j| + sqrt(g h_j)) over wet cells, clamped onto next_stop().
/// Throws NoWaveError when every cell is dry.
double cfl_dt(const Field& field, const RunConfig& config);

/// Numerical fluxes F_{j-1/2} for j = 0..n (n + 1 entries, ghosts at both ends).
std::vector<Vec2> interface_fluxes(const Field& field, const Ghosts& ghosts, const RunConfig& config);

/// W_j - dt/dx (F_{j+1/2} - F_{j-1/2}); advances time by dt and enforces positivity.
Field apply_conservation(const Field& field, const std::vector<Vec2>& fluxes, double dt);

/// Clips roundoff-negative depths to a dry rest state; throws PositivityError below
/// -kPositivityTolerance.
void enforce_positivity(Field& field);

/// One step of the homogeneous system with ghosts filled at field.time.
Field homogeneous_step(const Field& field, double dt, const BoundaryCondition& bc, const RunConfig& config);

}  // namespace swsplit
