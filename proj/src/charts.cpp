#include "rigidbody/charts.hpp"

#include <cmath>
#include <numbers>

namespace rigidbody {

namespace {

constexpr double kPi = std::numbers::pi;

// Elementary frame rotations about body axes 1, 2, 3.
Mat3 rot1(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return Mat3{{1, 0, 0, 0, c, s, 0, -s, c}};
}
Mat3 rot2(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return Mat3{{c, 0, -s, 0, 1, 0, s, 0, c}};
}
Mat3 rot3(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return Mat3{{c, s, 0, -s, c, 0, 0, 0, 1}};
}

// Maps an atan2 result onto (-pi, pi].
double principal(double a) {
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

void check_coords(const GenCoords& c) {
  if (!all_finite(c.q)) throw DomainError("non-finite generalized coordinates");
  if (c.chart == ChartKind::QuatReduced && dot(c.q, c.q) >= 1.0)
    throw DomainError("reduced Euler parameters outside unit ball: q2^2+q3^2+q4^2 >= 1");
}

// q1 for the reduced quaternion chart; caller has checked the domain.
double quat_scalar(const Vec3& v) { return std::sqrt(1.0 - dot(v, v)); }

}  // namespace

const char* to_string(ChartKind kind) {
  switch (kind) {
    case ChartKind::Euler321: return "euler321";
    case ChartKind::Euler313: return "euler313";
    case ChartKind::QuatReduced: return "quat";
  }
  return "?";
}

Mat3 s_matrix(const GenCoords& c) {
  check_coords(c);
  switch (c.chart) {
    case ChartKind::Euler321: {
      const double cphi = std::cos(c.q.x), sphi = std::sin(c.q.x);
      const double cth = std::cos(c.q.y), sth = std::sin(c.q.y);
      return Mat3{{1, 0, -sth, 0, cphi, sphi * cth, 0, -sphi, cphi * cth}};
    }
    case ChartKind::Euler313: {
      const double cpsi = std::cos(c.q.x), spsi = std::sin(c.q.x);
      const double cth = std::cos(c.q.y), sth = std::sin(c.q.y);
      return Mat3{{0, cpsi, spsi * sth, 0, -spsi, cpsi * sth, 1, 0, cth}};
    }
    case ChartKind::QuatReduced: {
      const Vec3 v = c.q;
      const double q1 = quat_scalar(v);
      Mat3 s = q1 * Mat3::identity() - skew(v);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s(i, j) += v[i] * v[j] / q1;
      return 2.0 * s;
    }
  }
  throw DomainError("unknown chart");
}

std::array<Mat3, 3> s_partials(const GenCoords& c) {
  check_coords(c);
  switch (c.chart) {
    case ChartKind::Euler321: {
      const double cphi = std::cos(c.q.x), sphi = std::sin(c.q.x);
      const double cth = std::cos(c.q.y), sth = std::sin(c.q.y);
      const Mat3 dphi{{0, 0, 0, 0, -sphi, cphi * cth, 0, -cphi, -sphi * cth}};
      const Mat3 dth{{0, 0, -cth, 0, 0, -sphi * sth, 0, 0, -cphi * sth}};
      return {dphi, dth, Mat3{}};
    }
    case ChartKind::Euler313: {
      const double cpsi = std::cos(c.q.x), spsi = std::sin(c.q.x);
      const double cth = std::cos(c.q.y), sth = std::sin(c.q.y);
      const Mat3 dpsi{{0, -spsi, cpsi * sth, 0, -cpsi, -spsi * sth, 0, 0, 0}};
      const Mat3 dth{{0, 0, spsi * cth, 0, 0, cpsi * cth, 0, 0, -sth}};
      return {dpsi, dth, Mat3{}};
    }
    case ChartKind::QuatReduced: {
      const Vec3 v = c.q;
      const double q1 = quat_scalar(v);
      std::array<Mat3, 3> d;
      for (int i = 0; i < 3; ++i) {
        Vec3 ei;
        ei[i] = 1.0;
        // d/dq_i of 2(q1 I - v^x + v v^T / q1), with dq1/dq_i = -v_i/q1.
        Mat3 m = (-v[i] / q1) * Mat3::identity() - skew(ei);
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 3; ++s)
            m(r, s) += (ei[r] * v[s] + v[r] * ei[s]) / q1 + v[r] * v[s] * v[i] / (q1 * q1 * q1);
        d[i] = 2.0 * m;
      }
      return d;
    }
  }
  throw DomainError("unknown chart");
}

double s_det(const GenCoords& c) {
  check_coords(c);
  switch (c.chart) {
    case ChartKind::Euler321:
      return std::cos(c.q.y);
    case ChartKind::Euler313:
      return std::sin(c.q.y);
    case ChartKind::QuatReduced:
      return 8.0 / quat_scalar(c.q);
  }
  throw DomainError("unknown chart");
}

KinematicsEval kinematics_eval(const GenCoords& c) {
  return {s_matrix(c), s_partials(c), s_det(c)};
}

Vec3 omega_from(const GenCoords& c, const Vec3& qdot) { return s_matrix(c) * qdot; }

Vec3 qdot_from_omega(const GenCoords& c, const Vec3& omega) {
  if (std::fabs(s_det(c)) <= kGimbalTol)
    throw GimbalLock("qdot_from_omega: S(q) singular (gimbal lock)");
  return solve3(s_matrix(c), omega);
}

Mat3 rotation_matrix(const GenCoords& c) {
  check_coords(c);
  switch (c.chart) {
    case ChartKind::Euler321:
      return rot1(c.q.x) * rot2(c.q.y) * rot3(c.q.z);
    case ChartKind::Euler313:
      return rot3(c.q.x) * rot1(c.q.y) * rot3(c.q.z);
    case ChartKind::QuatReduced: {
      const double q1 = quat_scalar(c.q);
      return to_rotation(Quat{q1, c.q.x, c.q.y, c.q.z});
    }
  }
  throw DomainError("unknown chart");
}

std::array<double, 4> quat_lift(const GenCoords& c) {
  if (c.chart != ChartKind::QuatReduced)
    throw DomainError("quat_lift requires QuatReduced coordinates");
  check_coords(c);
  return {quat_scalar(c.q), c.q.x, c.q.y, c.q.z};
}

Quat attitude_of(const GenCoords& c) {
  if (c.chart == ChartKind::QuatReduced) {
    check_coords(c);
    return Quat{quat_scalar(c.q), c.q.x, c.q.y, c.q.z};
  }
  return from_rotation(rotation_matrix(c));
}

GenCoords coords_from_rotation(const Mat3& r, ChartKind target) {
  if (!all_finite(r)) throw DomainError("non-finite rotation matrix");

  // The identity attitude is representable as zero coordinates in every
  // chart, including 3-1-3 where it sits on the sin(theta) = 0 set.
  if (max_abs(r - Mat3::identity()) <= 1e-12) return {target, Vec3{}};

  switch (target) {
    case ChartKind::Euler321: {
      const double sth = -r(0, 2);
      const double cth = std::hypot(r(0, 0), r(0, 1));
      if (cth <= kGimbalTol)
        throw GimbalLock("Euler321 singular at this attitude (cos theta = 0)");
      return {target, Vec3{principal(std::atan2(r(1, 2), r(2, 2))), std::atan2(sth, cth),
                           principal(std::atan2(r(0, 1), r(0, 0)))}};
    }
    case ChartKind::Euler313: {
      const double cth = r(2, 2);
      const double sth = std::hypot(r(2, 0), r(2, 1));
      if (sth <= kGimbalTol)
        throw AmbiguousAttitude(
            "Euler313 singular at this attitude (sin theta = 0): psi/phi split is ambiguous");
      return {target, Vec3{principal(std::atan2(r(0, 2), r(1, 2))), std::atan2(sth, cth),
                           principal(std::atan2(r(2, 0), -r(2, 1)))}};
    }
    case ChartKind::QuatReduced: {
      const Quat q = from_rotation(r);
      if (q.w < 1e-6)
        throw DomainError("attitude eigenangle too close to pi for reduced Euler parameters");
      return {target, q.vec()};
    }
  }
  throw DomainError("unknown chart");
}

GenCoords coords_from_attitude(const Quat& q, ChartKind target) {
  return coords_from_rotation(to_rotation(normalized(q)), target);
}

GenCoords chart_convert(const GenCoords& c, ChartKind target) {
  return coords_from_rotation(rotation_matrix(c), target);
}

}  // namespace rigidbody
