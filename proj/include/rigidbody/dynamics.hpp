#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "rigidbody/charts.hpp"
#include "rigidbody/lin3.hpp"

namespace rigidbody {

struct TorqueZero {};
struct TorqueConstant {
  Vec3 value;  // N*m, body frame
};
struct TorquePiecewiseLinear {
  // (t, tau) knots with strictly increasing t; linear between knots,
  // clamped to the end values outside the knot range.
  std::vector<std::pair<double, Vec3>> points;
};
struct TorqueSpinUp {
  Vec3 axis;         // direction, normalized internally
  double magnitude;  // N*m
  double t_on;
  double t_off;
};

using TorqueProfile = std::variant<TorqueZero, TorqueConstant, TorquePiecewiseLinear, TorqueSpinUp>;

Vec3 torque_at(const TorqueProfile& profile, double t);

/// Throws ConfigError for non-finite values, non-increasing knot times, or a
/// zero spin-up axis.
void validate_torque(const TorqueProfile& profile);

struct RigidBodyParams {
  Mat3 J;  // inertia about the center of mass, body frame, kg*m^2
  TorqueProfile torque = TorqueZero{};
};

/// Symmetric within 1e-12 * ||J|| and positive definite (leading principal
/// minors > 0); throws InvalidInertia otherwise.
void validate_inertia(const Mat3& J);

/// Triangle inequalities J11 + J22 >= J33 (cyclic) on the diagonal; holds for
/// any physical body. Diagnostic only -- callers warn, never reject.
bool inertia_triangle_ok(const Mat3& J);

/// Body-frame Euler equation: omegadot = J^-1 (tau - omega x J omega).
Vec3 euler_rhs(const Mat3& J, const Vec3& omega, const Vec3& tau);

/// T = (1/2) omega^T J omega.
double kinetic_energy(const Mat3& J, const Vec3& omega);

/// Generalized force Q = S(q)^T tau.
Vec3 generalized_force(const GenCoords& c, const Vec3& tau);

/// qddot solving S^T J S qddot + S^T J Sdot qdot + Sdot^T J S qdot
///               - [qdot^T dSi^T J S qdot]_i = S^T tau.
/// Equivalent to Euler's equation mapped through the chart:
/// S qddot + Sdot qdot = euler_rhs(J, S qdot, tau).
/// Throws GimbalLock when |det S| <= kGimbalTol (or the S^T J S solve is
/// numerically singular, which near lock amounts to the same thing).
Vec3 generalized_accel(const KinematicsEval& ev, const Vec3& qdot, const Mat3& J, const Vec3& tau);
Vec3 generalized_accel(const GenCoords& c, const Vec3& qdot, const RigidBodyParams& params,
                       double t);

struct AngularMomentum {
  Vec3 body;      // J S(q) qdot
  Vec3 inertial;  // R^T * body; conserved under zero torque
};

AngularMomentum angular_momentum(const GenCoords& c, const Vec3& qdot, const Mat3& J);

}  // namespace rigidbody
