#include "swsplit/flux.hpp"

#include <cmath>
#include <sstream>

namespace swsplit {

namespace {

EigenDecomposition eigen_of(double h, double q, double g) {
  const double u = q / h;
  const double c = std::sqrt(g * h);
  EigenDecomposition eig;
  eig.lambda1 = u + c;
  eig.lambda2 = u - c;
  eig.X = {1.0, 1.0, eig.lambda1, eig.lambda2};
  const double inv_det = 1.0 / (eig.lambda2 - eig.lambda1);
  eig.X_inv = {inv_det * eig.lambda2, -inv_det, -inv_det * eig.lambda1, inv_det};
  return eig;
}

void require_wet(const State& w, double dry_eps, const char* what) {
  if (!(w.h > dry_eps)) {
    std::ostringstream os;
    os << what << ": depth " << w.h << " is not above the dry threshold " << dry_eps;
    throw DepthDomainError(os.str());
  }
}

double regularized_sign(double lambda, double eps, const Physics& physics) {
  const double mag = std::abs(lambda);
  if (mag >= eps) return lambda > 0.0 ? 1.0 : -1.0;
  if (!physics.sonic_regularization) {
    std::ostringstream os;
    os << "critical interface state: |lambda| = " << mag << " below " << eps;
    throw SonicDegeneracyError(os.str());
  }
  return lambda / eps;
}

UpwindMatrices upwind_from(const EigenDecomposition& eig, double hbar, const Physics& physics) {
  const double eps = physics.sonic_eps_factor * std::sqrt(physics.g * hbar);
  const Mat2 s = eig.compose(regularized_sign(eig.lambda1, eps, physics),
                             regularized_sign(eig.lambda2, eps, physics));
  return {Mat2::identity() + s, Mat2::identity() - s};
}

Vec2 hydrostatic_or_full_flux(const State& w, const Physics& physics) {
  if (w.h < physics.dry_eps) return {0.0, 0.5 * physics.g * w.h * w.h};
  return {w.q, w.q * w.q / w.h + 0.5 * physics.g * w.h * w.h};
}

Vec2 q_scheme(const Vec2& fu, const Vec2& fv, const Mat2& abs_q, const State& u, const State& v) {
  const Vec2 jump{v.h - u.h, v.q - u.q};
  const Vec2 visc = abs_q * jump;
  return {0.5 * (fu[0] + fv[0]) - 0.5 * visc[0], 0.5 * (fu[1] + fv[1]) - 0.5 * visc[1]};
}

}  // namespace

Mat2 EigenDecomposition::compose(double d1, double d2) const {
  // X diag(d1, d2) X^-1 expanded; X^-1 carries the 1/(lambda2 - lambda1) factor.
  const double inv = 1.0 / (lambda2 - lambda1);
  return {inv * (d1 * lambda2 - d2 * lambda1), inv * (d2 - d1),
          inv * lambda1 * lambda2 * (d1 - d2), inv * (d2 * lambda2 - d1 * lambda1)};
}

Vec2 physical_flux(const State& w, double g) {
  if (!(w.h > 0.0)) {
    std::ostringstream os;
    os << "physical flux needs positive depth, got " << w.h;
    throw DepthDomainError(os.str());
  }
  return {w.q, w.q * w.q / w.h + 0.5 * g * w.h * w.h};
}

Mat2 jacobian(const State& w, double g) {
  if (!(w.h > 0.0)) throw DepthDomainError("Jacobian needs positive depth");
  const double u = w.q / w.h;
  return {0.0, 1.0, -u * u + g * w.h, 2.0 * u};
}

EigenDecomposition eigendecompose(const State& w, const Physics& physics) {
  require_wet(w, physics.dry_eps, "eigendecomposition");
  return eigen_of(w.h, w.q, physics.g);
}

State interface_mean(const State& u, const State& v) { return {0.5 * (u.h + v.h), 0.5 * (u.q + v.q)}; }

Mat2 abs_q_matrix(const State& u, const State& v, const Physics& physics) {
  const State mean = interface_mean(u, v);
  require_wet(mean, physics.dry_eps, "|Q| matrix");
  const EigenDecomposition eig = eigen_of(mean.h, mean.q, physics.g);
  return eig.compose(std::abs(eig.lambda1), std::abs(eig.lambda2));
}

Vec2 numerical_flux(const State& u, const State& v, const Physics& physics) {
  require_wet(u, physics.dry_eps, "numerical flux (left state)");
  require_wet(v, physics.dry_eps, "numerical flux (right state)");
  return q_scheme(physical_flux(u, physics.g), physical_flux(v, physics.g), abs_q_matrix(u, v, physics),
                  u, v);
}

Vec2 numerical_flux_wet_dry(const State& u, const State& v, const Physics& physics) {
  const bool u_dry = u.h < physics.dry_eps;
  const bool v_dry = v.h < physics.dry_eps;
  if (u_dry && v_dry) return {0.0, 0.0};
  if (!u_dry && !v_dry) return numerical_flux(u, v, physics);
  // Dry sides move with zero velocity; the mean depth is positive because one side is wet.
  const State uu = u_dry ? State{u.h, 0.0} : u;
  const State vv = v_dry ? State{v.h, 0.0} : v;
  const State mean = interface_mean(uu, vv);
  const EigenDecomposition eig = eigen_of(mean.h, mean.q, physics.g);
  const Mat2 abs_q = eig.compose(std::abs(eig.lambda1), std::abs(eig.lambda2));
  return q_scheme(hydrostatic_or_full_flux(uu, physics), hydrostatic_or_full_flux(vv, physics), abs_q,
                  uu, vv);
}

UpwindMatrices upwind_matrices(const State& u, const State& v, const Physics& physics) {
  const State mean = interface_mean(u, v);
  require_wet(mean, physics.dry_eps, "upwind matrices");
  return upwind_from(eigen_of(mean.h, mean.q, physics.g), mean.h, physics);
}

InterfaceDecomposition decompose_interface(const State& u, const State& v, const Physics& physics) {
  const State mean = interface_mean(u, v);
  require_wet(mean, physics.dry_eps, "interface decomposition");
  InterfaceDecomposition out;
  out.eig = eigen_of(mean.h, mean.q, physics.g);
  out.abs_Q = out.eig.compose(std::abs(out.eig.lambda1), std::abs(out.eig.lambda2));
  const UpwindMatrices d = upwind_from(out.eig, mean.h, physics);
  out.D_L = d.D_L;
  out.D_R = d.D_R;
  return out;
}

}  // namespace swsplit
