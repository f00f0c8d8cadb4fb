#include "swsplit/sources.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace swsplit {

SourceContext make_source_context(const Field& prev_field, const Ghosts& ghosts) {
  const std::size_t n = prev_field.size();
  const auto& b = prev_field.bathymetry.b;
  const double dx = prev_field.grid.dx;
  auto b_at = [&](std::ptrdiff_t j) {
    if (j < 0) return ghosts.b_left;
    if (j >= static_cast<std::ptrdiff_t>(n)) return ghosts.b_right;
    return b[static_cast<std::size_t>(j)];
  };

  SourceContext ctx;
  ctx.b_prime_central.resize(n);
  ctx.b_prime_left.resize(n);
  ctx.b_prime_right.resize(n);
  ctx.h_prev.resize(n);
  ctx.ghosts = ghosts;
  for (std::size_t j = 0; j < n; ++j) {
    const auto i = static_cast<std::ptrdiff_t>(j);
    ctx.b_prime_central[j] = (b_at(i + 1) - b_at(i - 1)) / (2.0 * dx);
    ctx.b_prime_left[j] = (b_at(i) - b_at(i - 1)) / dx;
    ctx.b_prime_right[j] = (b_at(i + 1) - b_at(i)) / dx;
    ctx.h_prev[j] = prev_field.states[j].h;
  }
  return ctx;
}

Field source_step_trapezoidal(const Field& hat_field, const SourceContext& ctx, double dt,
                              const RunConfig& config) {
  Field out = hat_field;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const State& hat = hat_field.states[j];
    out.states[j].q = hat.q - config.g * ctx.b_prime_central[j] * (dt / 2.0) * (ctx.h_prev[j] + hat.h);
  }
  return out;
}

double semi_implicit_discharge(double q_hat, double d22, double dt, double g, double hbar, double b_prime,
                               double manning, double abs_u) {
  const double numerator = q_hat - d22 * dt * g * hbar * b_prime;
  if (manning == 0.0) return numerator;
  const double denominator = 1.0 + d22 * dt * g * std::pow(hbar, -4.0 / 3.0) * manning * manning * abs_u;
  if (!(denominator > 0.0)) {
    std::ostringstream os;
    os << "semi-implicit friction denominator " << denominator << " is not positive (d22 = " << d22 << ")";
    throw FrictionStabilityError(os.str());
  }
  return numerator / denominator;
}

State upwind_side_update(const State& hat, const State& a, const State& b, double b_prime, Side side,
                         double dt, double manning, const Physics& physics) {
  const State mean = interface_mean(a, b);
  // Depth frozen at a dry interface mean makes the bed-slope source vanish.
  if (!(mean.h > physics.dry_eps)) return hat;
  const bool friction = manning > 0.0 && mean.q != 0.0;
  if (b_prime == 0.0 && !friction) return hat;

  const UpwindMatrices d = upwind_matrices(a, b, physics);
  const Mat2& D = side == Side::Left ? d.D_L : d.D_R;
  const double g = physics.g;
  const double hbar = mean.h;

  State out;
  out.h = hat.h - D.a12 * dt * g * hbar * b_prime;
  if (friction) {
    // |(q_a + q_b) / (h_a + h_b)| is the frozen Manning velocity.
    const double abs_u = std::abs(mean.q / mean.h);
    out.h -= D.a12 * dt * g * std::pow(hbar, -4.0 / 3.0) * mean.q * manning * manning * abs_u;
    out.q = semi_implicit_discharge(hat.q, D.a22, dt, g, hbar, b_prime, manning, abs_u);
  } else {
    out.q = semi_implicit_discharge(hat.q, D.a22, dt, g, hbar, b_prime, 0.0, 0.0);
  }
  return out;
}

namespace {

// The depth rows of the one-sided updates exchange mass across each interface
// (d12 is antisymmetric between D_L and D_R). Scales the exchanges leaving a
// cell so it cannot hand over more water than it holds after the flux step.
void limit_depth_exchange(const Field& hat_field, std::vector<double>& dl, std::vector<double>& dr,
                          Field& out) {
  const std::size_t n = hat_field.size();
  std::vector<double> theta(n, 1.0);
  bool active = false;
  for (std::size_t j = 0; j < n; ++j) {
    const double outflow = 0.5 * (std::max(-dl[j], 0.0) + std::max(-dr[j], 0.0));
    const double available = std::max(hat_field.states[j].h, 0.0);
    if (outflow > available) {
      theta[j] = available / outflow;
      active = true;
    }
  }
  if (!active) return;

  std::vector<bool> touched(n, false);
  auto scale = [&](std::size_t j, double& d) {
    if (d < 0.0 && theta[j] < 1.0) {
      d *= theta[j];
      touched[j] = true;
    }
  };
  for (std::size_t j = 0; j < n; ++j) {
    // Interface j+1/2 pairs dr[j] with dl[j+1]; the donor's factor applies to both.
    if (j + 1 < n) {
      const double t = dr[j] < 0.0 ? theta[j] : dl[j + 1] < 0.0 ? theta[j + 1] : 1.0;
      if (t < 1.0) {
        dr[j] *= t;
        dl[j + 1] *= t;
        touched[j] = touched[j + 1] = true;
      }
    }
  }
  scale(0, dl[0]);
  scale(n - 1, dr[n - 1]);
  for (std::size_t j = 0; j < n; ++j) {
    if (touched[j]) out.states[j].h = hat_field.states[j].h + 0.5 * (dl[j] + dr[j]);
  }
}

Field upwind_average(const Field& hat_field, const Field& prev_field, const SourceContext& ctx, double dt,
                     double manning, const RunConfig& config) {
  const Physics physics = Physics::from(config);
  const std::size_t n = hat_field.size();
  const auto& w = prev_field.states;
  Field out = hat_field;
  std::vector<double> dl(n), dr(n);
  for (std::size_t j = 0; j < n; ++j) {
    const State& west = j == 0 ? ctx.ghosts.left : w[j - 1];
    const State& east = j + 1 == n ? ctx.ghosts.right : w[j + 1];
    const State& hat = hat_field.states[j];
    const State left = upwind_side_update(hat, west, w[j], ctx.b_prime_left[j], Side::Left, dt, manning,
                                          physics);
    const State right = upwind_side_update(hat, w[j], east, ctx.b_prime_right[j], Side::Right, dt,
                                           manning, physics);
    out.states[j] = {0.5 * (left.h + right.h), 0.5 * (left.q + right.q)};
    dl[j] = left.h - hat.h;
    dr[j] = right.h - hat.h;
  }
  if (config.wet_dry) limit_depth_exchange(hat_field, dl, dr, out);
  return out;
}

}  // namespace

Field source_step_upwind(const Field& hat_field, const Field& prev_field, const SourceContext& ctx, double dt,
                         const RunConfig& config) {
  return upwind_average(hat_field, prev_field, ctx, dt, 0.0, config);
}

Field source_step_friction(const Field& hat_field, const Field& prev_field, const SourceContext& ctx,
                           double dt, const RunConfig& config) {
  return upwind_average(hat_field, prev_field, ctx, dt, config.manning_M, config);
}

}  // namespace swsplit
