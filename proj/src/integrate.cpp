#include "rigidbody/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace rigidbody {

namespace {

long step_count(double dt, double t_final) {
  if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t_final) || t_final < dt)
    throw ConfigError("simulate: need dt > 0 and t_final >= dt");
  return std::lround(t_final / dt);
}

TrajectorySample sample_generalized(double t, const GenCoords& c, const Vec3& qdot,
                                    const Mat3& J) {
  TrajectorySample s;
  s.t = t;
  s.q = c.q;
  s.qdot = qdot;
  s.omega = omega_from(c, qdot);
  s.R = rotation_matrix(c);
  s.energy = 0.5 * dot(s.omega, J * s.omega);
  s.h_inertial = transpose3(s.R) * (J * s.omega);
  return s;
}

TrajectorySample sample_body(double t, const Quat& q, const Vec3& omega, const Mat3& J) {
  TrajectorySample s;
  s.t = t;
  s.q = q.vec();
  s.qdot = quat_derivative(q, omega).vec();
  s.omega = omega;
  s.R = to_rotation(q);
  s.energy = 0.5 * dot(omega, J * omega);
  s.h_inertial = transpose3(s.R) * (J * omega);
  return s;
}

}  // namespace

SimResult simulate_generalized(const SimState& initial, const RigidBodyParams& params, double dt,
                               double t_final) {
  validate_inertia(params.J);
  validate_torque(params.torque);
  const long steps = step_count(dt, t_final);
  const ChartKind chart = initial.coords.chart;

  SimResult result;
  result.samples.reserve(static_cast<std::size_t>(steps) + 1);

  StateVec<6> x{initial.coords.q.x, initial.coords.q.y, initial.coords.q.z,
                initial.qdot.x,     initial.qdot.y,     initial.qdot.z};

  double stage_t = initial.t;  // time of the most recently attempted stage
  auto deriv = [&](double t, const StateVec<6>& s) -> StateVec<6> {
    stage_t = t;
    const GenCoords c{chart, {s[0], s[1], s[2]}};
    const Vec3 qdot{s[3], s[4], s[5]};
    const Vec3 qddot =
        generalized_accel(kinematics_eval(c), qdot, params.J, torque_at(params.torque, t));
    return {qdot.x, qdot.y, qdot.z, qddot.x, qddot.y, qddot.z};
  };

  result.samples.push_back(
      sample_generalized(initial.t, initial.coords, initial.qdot, params.J));

  for (long k = 0; k < steps; ++k) {
    const double t = initial.t + static_cast<double>(k) * dt;
    try {
      x = rk4_step<6>(deriv, t, x, dt);
      // End-of-step state can leave the chart domain even when every stage
      // evaluation succeeded, so recording the sample sits inside the try.
      const GenCoords c{chart, {x[0], x[1], x[2]}};
      result.samples.push_back(
          sample_generalized(initial.t + static_cast<double>(k + 1) * dt, c,
                             {x[3], x[4], x[5]}, params.J));
    } catch (const GimbalLock& e) {
      result.abort = SimAbort{stage_t, e.what()};
      return result;
    } catch (const DomainError& e) {
      result.abort = SimAbort{stage_t, e.what()};
      return result;
    }
  }
  return result;
}

SimResult simulate_body(const BodyState& initial, const RigidBodyParams& params, double dt,
                        double t_final) {
  validate_inertia(params.J);
  validate_torque(params.torque);
  const long steps = step_count(dt, t_final);

  SimResult result;
  result.samples.reserve(static_cast<std::size_t>(steps) + 1);

  Quat q = normalized(initial.attitude);
  StateVec<7> x{q.w, q.x, q.y, q.z, initial.omega.x, initial.omega.y, initial.omega.z};

  auto deriv = [&](double t, const StateVec<7>& s) -> StateVec<7> {
    const Quat qq{s[0], s[1], s[2], s[3]};
    const Vec3 omega{s[4], s[5], s[6]};
    const Quat qd = quat_derivative(qq, omega);
    const Vec3 wd = euler_rhs(params.J, omega, torque_at(params.torque, t));
    return {qd.w, qd.x, qd.y, qd.z, wd.x, wd.y, wd.z};
  };

  result.samples.push_back(sample_body(initial.t, q, initial.omega, params.J));

  for (long k = 0; k < steps; ++k) {
    const double t = initial.t + static_cast<double>(k) * dt;
    x = rk4_step<7>(deriv, t, x, dt);
    q = normalized(Quat{x[0], x[1], x[2], x[3]});
    x[0] = q.w;
    x[1] = q.x;
    x[2] = q.y;
    x[3] = q.z;
    result.samples.push_back(sample_body(initial.t + static_cast<double>(k + 1) * dt, q,
                                         {x[4], x[5], x[6]}, params.J));
  }
  return result;
}

double geodesic_angle(const Mat3& ra, const Mat3& rb) {
  const Mat3 rel = transpose3(ra) * rb;
  const double c = std::clamp(0.5 * (rel(0, 0) + rel(1, 1) + rel(2, 2) - 1.0), -1.0, 1.0);
  // rel - rel^T = 2 sin(theta) n^x; atan2 keeps full resolution at small
  // angles where acos alone bottoms out near sqrt(eps).
  const Vec3 ax{rel(2, 1) - rel(1, 2), rel(0, 2) - rel(2, 0), rel(1, 0) - rel(0, 1)};
  return std::atan2(0.5 * norm(ax), c);
}

CompareReport compare_trajectories(const std::vector<TrajectorySample>& a,
                                   const std::vector<TrajectorySample>& b) {
  if (a.size() != b.size()) throw GridMismatch("compare_trajectories: different sample counts");
  CompareReport rep;
  rep.samples = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i].t - b[i].t) > 1e-12)
      throw GridMismatch("compare_trajectories: time grids differ");
    const double ang = geodesic_angle(a[i].R, b[i].R);
    if (ang > rep.max_rotation_angle_rad) {
      rep.max_rotation_angle_rad = ang;
      rep.t_at_max_angle = a[i].t;
    }
    const double wd = norm(a[i].omega - b[i].omega);
    if (wd > rep.max_omega_diff) {
      rep.max_omega_diff = wd;
      rep.t_at_max_omega = a[i].t;
    }
  }
  return rep;
}

}  // namespace rigidbody
