#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rigidbody/charts.hpp"
#include "rigidbody/dynamics.hpp"
#include "rigidbody/quat.hpp"

namespace rigidbody {

template <std::size_t N>
using StateVec = std::array<double, N>;

namespace detail {
template <std::size_t N>
StateVec<N> axpy(const StateVec<N>& x, double a, const StateVec<N>& y) {
  StateVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] + a * y[i];
  return r;
}
template <std::size_t N>
void check_finite(const StateVec<N>& k, double t) {
  for (double v : k)
    if (!std::isfinite(v))
      throw NonFiniteDerivative("non-finite derivative at t = " + std::to_string(t));
}
}  // namespace detail

/// Classical fixed-step RK4. `deriv(t, x)` returns dx/dt; throws
/// NonFiniteDerivative if any stage derivative is non-finite.
template <std::size_t N, typename F>
StateVec<N> rk4_step(F&& deriv, double t, const StateVec<N>& x, double dt) {
  const StateVec<N> k1 = deriv(t, x);
  detail::check_finite(k1, t);
  const StateVec<N> k2 = deriv(t + 0.5 * dt, detail::axpy(x, 0.5 * dt, k1));
  detail::check_finite(k2, t + 0.5 * dt);
  const StateVec<N> k3 = deriv(t + 0.5 * dt, detail::axpy(x, 0.5 * dt, k2));
  detail::check_finite(k3, t + 0.5 * dt);
  const StateVec<N> k4 = deriv(t + dt, detail::axpy(x, dt, k3));
  detail::check_finite(k4, t + dt);
  StateVec<N> r;
  for (std::size_t i = 0; i < N; ++i)
    r[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return r;
}

struct SimState {
  double t = 0.0;
  GenCoords coords;
  Vec3 qdot;
};

struct BodyState {
  double t = 0.0;
  Quat attitude;  // renormalized every step
  Vec3 omega;     // rad/s, body frame
};

struct TrajectorySample {
  double t = 0.0;
  Vec3 q;           // chart coordinates (quaternion vector part for body runs)
  Vec3 qdot;
  Vec3 omega;       // rad/s
  Mat3 R;           // body from inertial
  double energy = 0.0;
  Vec3 h_inertial;  // angular momentum, inertial components
};

/// Reason a generalized-coordinate run stopped before t_final: the chart hit
/// its singular set (gimbal lock) or left its domain at stage time t.
struct SimAbort {
  double t = 0.0;
  std::string reason;
};

struct SimResult {
  std::vector<TrajectorySample> samples;
  std::optional<SimAbort> abort;
};

/// Fixed-step RK4 on (q, qdot) with qddot = generalized_accel. A sample is
/// recorded at every step. When any RK4 stage sees |det S| <= kGimbalTol
/// (or leaves the chart domain), the run stops cleanly and `abort` reports
/// the stage time; samples hold the trajectory up to the failure.
SimResult simulate_generalized(const SimState& initial, const RigidBodyParams& params, double dt,
                               double t_final);

/// Fixed-step RK4 on (attitude quaternion, omega); the reference formulation
/// with no singularities. `abort` is never set.
SimResult simulate_body(const BodyState& initial, const RigidBodyParams& params, double dt,
                        double t_final);

/// Geodesic rotation angle between two attitudes,
/// arccos((trace(Ra^T Rb) - 1) / 2), clamped before the arccos.
double geodesic_angle(const Mat3& ra, const Mat3& rb);

struct CompareReport {
  double max_rotation_angle_rad = 0.0;
  double t_at_max_angle = 0.0;
  double max_omega_diff = 0.0;  // Euclidean norm, rad/s
  double t_at_max_omega = 0.0;
  std::size_t samples = 0;
};

/// Pointwise attitude and rate discrepancy between two trajectories on the
/// same time grid; throws GridMismatch otherwise.
CompareReport compare_trajectories(const std::vector<TrajectorySample>& a,
                                   const std::vector<TrajectorySample>& b);

}  // namespace rigidbody
