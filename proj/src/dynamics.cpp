#include "rigidbody/dynamics.hpp"

#include <cmath>
#include <limits>

namespace rigidbody {

Vec3 torque_at(const TorqueProfile& profile, double t) {
  return std::visit(
      [t](const auto& p) -> Vec3 {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TorqueZero>) {
          return {};
        } else if constexpr (std::is_same_v<T, TorqueConstant>) {
          return p.value;
        } else if constexpr (std::is_same_v<T, TorquePiecewiseLinear>) {
          if (p.points.empty()) return {};
          if (t <= p.points.front().first) return p.points.front().second;
          if (t >= p.points.back().first) return p.points.back().second;
          for (std::size_t i = 1; i < p.points.size(); ++i) {
            if (t <= p.points[i].first) {
              const auto& [t0, v0] = p.points[i - 1];
              const auto& [t1, v1] = p.points[i];
              const double a = (t - t0) / (t1 - t0);
              return (1.0 - a) * v0 + a * v1;
            }
          }
          return p.points.back().second;
        } else {
          static_assert(std::is_same_v<T, TorqueSpinUp>);
          if (t < p.t_on || t > p.t_off) return {};
          const double n = norm(p.axis);
          return (p.magnitude / n) * p.axis;
        }
      },
      profile);
}

void validate_torque(const TorqueProfile& profile) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TorqueConstant>) {
          if (!all_finite(p.value)) throw ConfigError("torque: non-finite constant value");
        } else if constexpr (std::is_same_v<T, TorquePiecewiseLinear>) {
          double prev = -std::numeric_limits<double>::infinity();
          for (const auto& [t, v] : p.points) {
            if (!std::isfinite(t) || !all_finite(v))
              throw ConfigError("torque: non-finite piecewise point");
            if (t <= prev) throw ConfigError("torque: piecewise times must be strictly increasing");
            prev = t;
          }
        } else if constexpr (std::is_same_v<T, TorqueSpinUp>) {
          if (!all_finite(p.axis) || norm(p.axis) == 0.0)
            throw ConfigError("torque: spin-up axis must be finite and nonzero");
          if (!std::isfinite(p.magnitude) || !std::isfinite(p.t_on) || !std::isfinite(p.t_off) ||
              p.t_off < p.t_on)
            throw ConfigError("torque: bad spin-up window");
        }
      },
      profile);
}

void validate_inertia(const Mat3& J) {
  if (!all_finite(J)) throw InvalidInertia("inertia: non-finite entries");
  const double scale = max_abs(J);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::fabs(J(i, j) - J(j, i)) > 1e-12 * scale)
        throw InvalidInertia("inertia: not symmetric");
  const double m1 = J(0, 0);
  const double m2 = J(0, 0) * J(1, 1) - J(0, 1) * J(1, 0);
  const double m3 = det3(J);
  if (m1 <= 0.0 || m2 <= 0.0 || m3 <= 0.0)
    throw InvalidInertia("inertia: not positive definite");
}

bool inertia_triangle_ok(const Mat3& J) {
  const double a = J(0, 0), b = J(1, 1), c = J(2, 2);
  return a + b >= c && b + c >= a && c + a >= b;
}

Vec3 euler_rhs(const Mat3& J, const Vec3& omega, const Vec3& tau) {
  validate_inertia(J);
  return solve3(J, tau - cross(omega, J * omega));
}

double kinetic_energy(const Mat3& J, const Vec3& omega) {
  validate_inertia(J);
  return 0.5 * dot(omega, J * omega);
}

Vec3 generalized_force(const GenCoords& c, const Vec3& tau) {
  return transpose3(s_matrix(c)) * tau;
}

Vec3 generalized_accel(const KinematicsEval& ev, const Vec3& qdot, const Mat3& J,
                       const Vec3& tau) {
  validate_inertia(J);
  if (std::fabs(ev.detS) <= kGimbalTol)
    throw GimbalLock("generalized_accel: S(q) singular (gimbal lock)");

  const Mat3 st = transpose3(ev.S);
  Mat3 sjs = st * J * ev.S;
  // S^T J S is symmetric positive definite away from gimbal lock; enforce
  // exact symmetry against roundoff and verify the minors before solving.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double m = 0.5 * (sjs(i, j) + sjs(j, i));
      sjs(i, j) = m;
      sjs(j, i) = m;
    }
  const double m2 = sjs(0, 0) * sjs(1, 1) - sjs(0, 1) * sjs(1, 0);
  if (sjs(0, 0) <= 0.0 || m2 <= 0.0 || det3(sjs) <= 0.0)
    throw GimbalLock("generalized_accel: S^T J S not positive definite (near gimbal lock)");

  const Mat3 sdot = qdot.x * ev.dS[0] + qdot.y * ev.dS[1] + qdot.z * ev.dS[2];
  const Vec3 omega = ev.S * qdot;
  const Vec3 jw = J * omega;

  Vec3 rhs = st * tau - st * (J * (sdot * qdot)) - transpose3(sdot) * jw;
  for (int i = 0; i < 3; ++i) rhs[i] += dot(ev.dS[i] * qdot, jw);

  try {
    return solve3(sjs, rhs);
  } catch (const SingularMatrix&) {
    // J is SPD-checked, so a singular system can only come from S.
    throw GimbalLock("generalized_accel: S^T J S numerically singular (near gimbal lock)");
  }
}

Vec3 generalized_accel(const GenCoords& c, const Vec3& qdot, const RigidBodyParams& params,
                       double t) {
  return generalized_accel(kinematics_eval(c), qdot, params.J, torque_at(params.torque, t));
}

AngularMomentum angular_momentum(const GenCoords& c, const Vec3& qdot, const Mat3& J) {
  validate_inertia(J);
  const Vec3 body = J * omega_from(c, qdot);
  return {body, transpose3(rotation_matrix(c)) * body};
}

}  // namespace rigidbody
