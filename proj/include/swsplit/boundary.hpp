#pragma once

#include <functional>
#include <variant>

#include "swsplit/core.hpp"

namespace swsplit {

/// Reflective wall: mirrored depth, reversed discharge.
struct Wall {};

/// Free-surface elevation imposed at the boundary, `surface(t)` in meters.
/// The ghost depth is surface(t) minus the (mirrored) ghost bottom.
struct PrescribedDepth {
  std::function<double(double)> surface;
};

/// Discharge imposed during [t_begin, t_end]; a wall outside that interval.
struct PrescribedDischarge {
  std::function<double(double)> discharge;
  double t_begin = 0.0;
  double t_end = 0.0;
};

/// Zeroth-order extrapolation of state and bottom.
struct Transmissive {};

using BoundarySpec = std::variant<Wall, PrescribedDepth, PrescribedDischarge, Transmissive>;

struct BoundaryCondition {
  BoundarySpec left = Wall{};
  BoundarySpec right = Wall{};

  static BoundaryCondition walls() { return {Wall{}, Wall{}}; }
};

struct Ghosts {
  State left;
  State right;
  double b_left = 0.0;
  double b_right = 0.0;
};

/// Ghost states and ghost bottoms on both sides at time t.
Ghosts fill_ghosts(const Field& field, const BoundaryCondition& bc, double t);

}  // namespace swsplit
