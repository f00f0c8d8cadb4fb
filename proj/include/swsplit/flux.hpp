#pragma once

#include <array>

#include "swsplit/core.hpp"

namespace swsplit {

/// Flux vector (mass, momentum).
using Vec2 = std::array<double, 2>;

/// Row-major 2x2 matrix with the handful of closed-form operations the solver needs.
struct Mat2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diag(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  Vec2 operator*(const Vec2& v) const { return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]}; }
  Mat2 operator+(const Mat2& o) const { return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22}; }
  Mat2 operator-(const Mat2& o) const { return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Eigenstructure of the Jacobian: X has columns (1, lambda1) and (1, lambda2).
struct EigenDecomposition {
  double lambda1 = 0.0;  ///< u + sqrt(g h)
  double lambda2 = 0.0;  ///< u - sqrt(g h)
  Mat2 X;
  Mat2 X_inv;

  /// X * diag(f(lambda1), f(lambda2)) * X_inv for the given diagonal entries.
  Mat2 compose(double d1, double d2) const;
};

/// Upwind projections D_L = I + |Q| Q^-1 and D_R = I - |Q| Q^-1.
struct UpwindMatrices {
  Mat2 D_L;
  Mat2 D_R;
};

struct InterfaceDecomposition {
  EigenDecomposition eig;
  Mat2 abs_Q;
  Mat2 D_L;
  Mat2 D_R;
};

/// F(W) = (q, q^2/h + g h^2 / 2). Throws DepthDomainError for h <= 0.
Vec2 physical_flux(const State& w, double g);

/// Jacobian A(W) of the physical flux.
Mat2 jacobian(const State& w, double g);

/// Closed-form eigendecomposition of A(w). Requires w.h > dry_eps.
EigenDecomposition eigendecompose(const State& w, const Physics& physics);

/// Componentwise arithmetic mean of two states.
State interface_mean(const State& u, const State& v);

/// |Q(U, V)| = X |Lambda| X^-1 evaluated at the arithmetic mean of U and V.
Mat2 abs_q_matrix(const State& u, const State& v, const Physics& physics);

/// Q-scheme flux phi(U, V) = (F(U) + F(V))/2 - |Q(U, V)| (V - U) / 2.
///
/// Both states and their mean must be wet (h > dry_eps); otherwise DepthDomainError.
Vec2 numerical_flux(const State& u, const State& v, const Physics& physics);

/// Q-scheme flux that tolerates dry neighbours: a dry side contributes a
/// motionless hydrostatic flux, and an interface with two dry sides carries no flux.
Vec2 numerical_flux_wet_dry(const State& u, const State& v, const Physics& physics);

/// D_L and D_R at the mean of U and V, computed as I +- X sign(Lambda) X^-1.
///
/// With sonic regularization on, sign(lambda) becomes lambda / max(|lambda|, eps),
/// eps = sonic_eps_factor * sqrt(g hbar). With it off, |lambda| < eps raises
/// SonicDegeneracyError.
UpwindMatrices upwind_matrices(const State& u, const State& v, const Physics& physics);

/// Everything above for one interface, sharing a single eigendecomposition.
InterfaceDecomposition decompose_interface(const State& u, const State& v, const Physics& physics);

}  // namespace swsplit
