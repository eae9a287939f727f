#pragma once

#include "rigidbody/lin3.hpp"

namespace rigidbody {

/// Unit quaternion, scalar-first Hamilton convention.
/// Represents the same attitude as the direction-cosine matrix returned by
/// to_rotation(): body components = R * inertial components.
struct Quat {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quat() = default;
  constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  constexpr Vec3 vec() const { return {x, y, z}; }

  /// Rotation by `angle` about the (not necessarily unit) `axis`.
  static Quat from_axis_angle(const Vec3& axis, double angle);
};

Quat operator*(const Quat& a, const Quat& b);
constexpr Quat operator+(const Quat& a, const Quat& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Quat operator*(double s, const Quat& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

inline double norm(const Quat& q) {
  return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}
Quat normalized(const Quat& q);
constexpr Quat conjugate(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Direction-cosine matrix mapping inertial components to body components:
/// R = (w^2 - |v|^2) I + 2 v v^T - 2 w v^x.
Mat3 to_rotation(const Quat& q);

/// Inverse of to_rotation via Shepperd's method; the sign is canonicalized
/// so the scalar part is non-negative.
Quat from_rotation(const Mat3& r);

/// Quaternion kinematics qdot = (1/2) q (0, omega), omega in body frame.
Quat quat_derivative(const Quat& q, const Vec3& omega);

}  // namespace rigidbody
