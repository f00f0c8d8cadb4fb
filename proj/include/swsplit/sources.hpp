#pragma once

#include <vector>

#include "swsplit/boundary.hpp"
#include "swsplit/core.hpp"
#include "swsplit/flux.hpp"

namespace swsplit {

/// Bottom slopes and the time-t^n data the source ODEs are integrated against.
struct SourceContext {
  std::vector<double> b_prime_central;  ///< (b_{j+1} - b_{j-1}) / (2 dx)
  std::vector<double> b_prime_left;     ///< (b_j - b_{j-1}) / dx
  std::vector<double> b_prime_right;    ///< (b_{j+1} - b_j) / dx
  std::vector<double> h_prev;           ///< depths before the homogeneous step
  Ghosts ghosts;                        ///< ghost states/bottoms of the time-t^n field
};

/// Builds slopes from the field's solver bottom and the ghost bottoms in `ghosts`.
SourceContext make_source_context(const Field& prev_field, const Ghosts& ghosts);

/// Trapezoidal source step: h unchanged, q -= g b' dt/2 (h^n + h_hat) with central b'.
Field source_step_trapezoidal(const Field& hat_field, const SourceContext& ctx, double dt,
                              const RunConfig& config);

/// Upwinded source step: average of the left and right one-sided updates, each
/// projected with D_L / D_R at the interface mean of prev_field and integrated
/// with depth frozen at that mean. With wet/dry treatment on, the depth exchange
/// leaving a cell is capped at the water it holds after the homogeneous step.
Field source_step_upwind(const Field& hat_field, const Field& prev_field, const SourceContext& ctx, double dt,
                         const RunConfig& config);

/// As source_step_upwind plus Manning friction -g q M^2 |q/h| h^(-4/3), explicit in
/// the h-row and semi-implicit in the q-row.
Field source_step_friction(const Field& hat_field, const Field& prev_field, const SourceContext& ctx,
                           double dt, const RunConfig& config);

enum class Side { Left, Right };

/// One-sided update of a single cell.
///
/// `a` and `b` are the time-t^n states on either side of the interface (ordered
/// left to right), `b_prime` is the one-sided bottom slope across it.
/// Uses D_L for Side::Left and D_R for Side::Right; `manning` = 0 disables friction.
State upwind_side_update(const State& hat, const State& a, const State& b, double b_prime, Side side,
                         double dt, double manning, const Physics& physics);

/// Semi-implicit discharge update
/// (q_hat - d22 dt g hbar b') / (1 + d22 dt g hbar^(-4/3) M^2 |u|).
/// Throws FrictionStabilityError when the denominator is not positive.
double semi_implicit_discharge(double q_hat, double d22, double dt, double g, double hbar, double b_prime,
                               double manning, double abs_u);

}  // namespace swsplit
