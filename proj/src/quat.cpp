#include "rigidbody/quat.hpp"

#include <cmath>

namespace rigidbody {

Quat Quat::from_axis_angle(const Vec3& axis, double angle) {
  const double n = rigidbody::norm(axis);
  if (n == 0.0) return {};
  const double h = 0.5 * angle;
  const Vec3 u = axis / n;
  const double s = std::sin(h);
  return {std::cos(h), s * u.x, s * u.y, s * u.z};
}

Quat operator*(const Quat& a, const Quat& b) {
  const Vec3 va = a.vec();
  const Vec3 vb = b.vec();
  const Vec3 v = a.w * vb + b.w * va + cross(va, vb);
  return {a.w * b.w - dot(va, vb), v.x, v.y, v.z};
}

Quat normalized(const Quat& q) {
  const double n = norm(q);
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

Mat3 to_rotation(const Quat& q) {
  const Vec3 v = q.vec();
  const double s = q.w * q.w - dot(v, v);
  Mat3 r = s * Mat3::identity() - 2.0 * q.w * skew(v);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) += 2.0 * v[i] * v[j];
  return r;
}

Quat from_rotation(const Mat3& r) {
  // Shepperd: pick the largest of 4w^2, 4x^2, 4y^2, 4z^2 to divide by.
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  const double t[4] = {1.0 + tr, 1.0 + r(0, 0) - r(1, 1) - r(2, 2),
                       1.0 - r(0, 0) + r(1, 1) - r(2, 2), 1.0 - r(0, 0) - r(1, 1) + r(2, 2)};
  int k = 0;
  for (int i = 1; i < 4; ++i)
    if (t[i] > t[k]) k = i;

  Quat q;
  const double s = 2.0 * std::sqrt(t[k]);
  switch (k) {
    case 0:
      q.w = 0.25 * s;
      q.x = (r(1, 2) - r(2, 1)) / s;
      q.y = (r(2, 0) - r(0, 2)) / s;
      q.z = (r(0, 1) - r(1, 0)) / s;
      break;
    case 1:
      q.x = 0.25 * s;
      q.w = (r(1, 2) - r(2, 1)) / s;
      q.y = (r(0, 1) + r(1, 0)) / s;
      q.z = (r(2, 0) + r(0, 2)) / s;
      break;
    case 2:
      q.y = 0.25 * s;
      q.w = (r(2, 0) - r(0, 2)) / s;
      q.x = (r(0, 1) + r(1, 0)) / s;
      q.z = (r(1, 2) + r(2, 1)) / s;
      break;
    default:
      q.z = 0.25 * s;
      q.w = (r(0, 1) - r(1, 0)) / s;
      q.x = (r(2, 0) + r(0, 2)) / s;
      q.y = (r(1, 2) + r(2, 1)) / s;
      break;
  }
  q = normalized(q);
  if (q.w < 0.0) q = {-q.w, -q.x, -q.y, -q.z};
  return q;
}

Quat quat_derivative(const Quat& q, const Vec3& omega) {
  return 0.5 * (q * Quat{0.0, omega.x, omega.y, omega.z});
}

}  // namespace rigidbody
