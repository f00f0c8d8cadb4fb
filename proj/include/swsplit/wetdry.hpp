#pragma once

#include "swsplit/core.hpp"

namespace swsplit {

inline bool is_dry(const State& s, double dry_eps) { return s.h < dry_eps; }

/// Recomputes the solver bottom from the pristine one so that no spurious
/// pressure force appears across a wet/dry front. Single ascending sweep with
/// surfaces taken before the sweep:
///   - j dry, j-1 wet, eta_{j-1} < eta_j  ->  b_j = b_{j-1} + h_{j-1}
///   - j wet, j-1 dry, eta_{j-1} > eta_j  ->  b_j = b_{j-1} - h_j
/// Depths and discharges are untouched.
Field redefine_bottom(const Field& field, double dry_eps);

/// Zeroes discharge in dry cells and in wet cells flowing into a dry neighbour.
Field zero_front_discharge(const Field& field, double dry_eps);

}  // namespace swsplit
