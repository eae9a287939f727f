#pragma once

// Test-only closed-form references, independent of the integrators and
// chart machinery they are used to check.

#include <cmath>

#include "rigidbody/lin3.hpp"
#include "rigidbody/quat.hpp"

namespace rigidbody::oracles {

/// Active rotation by `angle` about the unit axis `u` (Rodrigues).
inline Mat3 axis_rotation(const Vec3& u, double angle) {
  const Mat3 k = skew(u);
  return Mat3::identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * (k * k);
}

/// Closed-form torque-free motion of an axisymmetric body,
/// J = diag(Jt, Jt, Ja). The body-3 axis precesses about the (constant)
/// inertial angular momentum at rate |h|/Jt while the body spins about its
/// symmetry axis at rate w3 (1 - Ja/Jt).
struct AxisymmetricTorqueFree {
  double jt, ja;
  Vec3 omega0;
  Mat3 a0;       // inertial-from-body at t = 0
  Vec3 h_unit;   // inertial angular momentum direction
  double prec_rate, spin_rate, wobble_rate;

  AxisymmetricTorqueFree(const Mat3& j, const Quat& attitude0, const Vec3& w0)
      : jt(j(0, 0)), ja(j(2, 2)), omega0(w0), a0(transpose3(to_rotation(attitude0))) {
    const Vec3 h_body{jt * w0.x, jt * w0.y, ja * w0.z};
    const Vec3 h_in = a0 * h_body;
    const double h = norm(h_in);
    h_unit = h_in / h;
    prec_rate = h / jt;
    spin_rate = w0.z * (1.0 - ja / jt);
    wobble_rate = (ja - jt) * w0.z / jt;
  }

  Vec3 omega_at(double t) const {
    const double c = std::cos(wobble_rate * t), s = std::sin(wobble_rate * t);
    return {omega0.x * c - omega0.y * s, omega0.x * s + omega0.y * c, omega0.z};
  }

  /// Body-from-inertial direction-cosine matrix at time t.
  Mat3 attitude_at(double t) const {
    const Mat3 a = axis_rotation(h_unit, prec_rate * t) * a0 *
                   axis_rotation(Vec3{0, 0, 1}, spin_rate * t);
    return transpose3(a);
  }
};

}  // namespace rigidbody::oracles
