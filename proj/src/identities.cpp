#include "rigidbody/identities.hpp"

#include <cmath>
#include <numbers>

#include "rigidbody/dynamics.hpp"

namespace rigidbody {

namespace {

Mat3 sdot_of(const KinematicsEval& ev, const Vec3& qdot) {
  return qdot.x * ev.dS[0] + qdot.y * ev.dS[1] + qdot.z * ev.dS[2];
}

// Columns [dS1 qdot  dS2 qdot  dS3 qdot].
Mat3 partials_times_qdot(const KinematicsEval& ev, const Vec3& qdot) {
  return Mat3::from_cols(ev.dS[0] * qdot, ev.dS[1] * qdot, ev.dS[2] * qdot);
}

}  // namespace

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::Prop1a: return "prop1a";
    case IdentityId::Prop1b: return "prop1b";
    case IdentityId::Prop1c: return "prop1c";
    case IdentityId::IdentShort: return "identshort";
    case IdentityId::Coriolis: return "coriolis";
    case IdentityId::QuatMS: return "quat_ms";
  }
  return "?";
}

Mat3 residual_prop1a(const KinematicsEval& ev, const Vec3& qdot) {
  return sdot_of(ev, qdot) + skew(ev.S * qdot) * ev.S - partials_times_qdot(ev, qdot);
}
Mat3 residual_prop1a(const GenCoords& c, const Vec3& qdot) {
  return residual_prop1a(kinematics_eval(c), qdot);
}

Mat3 residual_prop1b(const KinematicsEval& ev, const Vec3& qdot) {
  return sdot_of(ev, qdot) + cofactor_columns(ev.S) * skew(qdot) - partials_times_qdot(ev, qdot);
}
Mat3 residual_prop1b(const GenCoords& c, const Vec3& qdot) {
  return residual_prop1b(kinematics_eval(c), qdot);
}

std::array<Vec3, 3> residual_prop1c(const KinematicsEval& ev) {
  const Vec3 s1 = ev.S.col(0), s2 = ev.S.col(1), s3 = ev.S.col(2);
  return {ev.dS[1].col(0) - ev.dS[0].col(1) - cross(s1, s2),
          ev.dS[2].col(0) - ev.dS[0].col(2) - cross(s1, s3),
          ev.dS[2].col(1) - ev.dS[1].col(2) - cross(s2, s3)};
}
std::array<Vec3, 3> residual_prop1c(const GenCoords& c) {
  return residual_prop1c(kinematics_eval(c));
}

Mat3 residual_identshort(const KinematicsEval& ev) {
  const Mat3 inner = Mat3::from_cols(ev.dS[2].col(1) - ev.dS[1].col(2),
                                     ev.dS[0].col(2) - ev.dS[2].col(0),
                                     ev.dS[1].col(0) - ev.dS[0].col(1));
  return transpose3(ev.S) * inner - ev.detS * Mat3::identity();
}
Mat3 residual_identshort(const GenCoords& c) {
  return residual_identshort(kinematics_eval(c));
}

Vec3 residual_coriolis(const KinematicsEval& ev, const Vec3& qdot, const Mat3& J) {
  validate_inertia(J);
  if (std::fabs(ev.detS) <= kGimbalTol)
    throw GimbalLock("residual_coriolis: S(q) singular (gimbal lock)");
  const Vec3 omega = ev.S * qdot;
  const Vec3 jw = J * omega;
  Vec3 g = transpose3(sdot_of(ev, qdot)) * jw;
  for (int i = 0; i < 3; ++i) g[i] -= dot(ev.dS[i] * qdot, jw);
  return solve3(transpose3(ev.S), g) - cross(omega, jw);
}
Vec3 residual_coriolis(const GenCoords& c, const Vec3& qdot, const Mat3& J) {
  return residual_coriolis(kinematics_eval(c), qdot, J);
}

Mat3 quat_m_matrix(const GenCoords& c) {
  const auto q = quat_lift(c);  // [q1, q2, q3, q4]; DomainError off-chart
  const double f = 4.0 / q[0];
  return f * Mat3{{q[0], q[3], -q[2], -q[3], q[0], q[1], q[2], -q[1], q[0]}};
}

std::array<Mat3, 3> finite_diff_partials(const GenCoords& c, double h) {
  if (h <= 0.0) throw DomainError("finite_diff_partials: h must be positive");
  std::array<Mat3, 3> d;
  for (int i = 0; i < 3; ++i) {
    GenCoords plus = c, minus = c;
    plus.q[i] += h;
    minus.q[i] -= h;
    d[i] = (1.0 / (2.0 * h)) * (s_matrix(plus) - s_matrix(minus));
  }
  return d;
}

Vec3 sample_in_domain(ChartKind chart, std::mt19937_64& rng) {
  constexpr double kPi = std::numbers::pi;
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  switch (chart) {
    case ChartKind::Euler321:
      for (;;) {
        const double th = 0.5 * kPi * unit(rng);
        if (std::fabs(std::cos(th)) < 0.05) continue;
        return {angle(rng), th, angle(rng)};
      }
    case ChartKind::Euler313:
      for (;;) {
        const double th = 0.5 * kPi * (unit(rng) + 1.0);
        if (std::fabs(std::sin(th)) < 0.05) continue;
        return {angle(rng), th, angle(rng)};
      }
    case ChartKind::QuatReduced:
      for (;;) {
        const Vec3 v{0.9 * unit(rng), 0.9 * unit(rng), 0.9 * unit(rng)};
        if (norm(v) <= 0.9) return v;
      }
  }
  throw DomainError("unknown chart");
}

std::vector<IdentityReport> run_identity_suite(const std::vector<ChartKind>& charts, long samples,
                                               std::uint64_t seed, double tol) {
  const Mat3 j_suite = Mat3::diag(1.0, 2.0, 3.0);
  std::vector<IdentityReport> out;

  for (ChartKind chart : charts) {
    // Per-chart stream so a single-chart run reproduces the same samples
    // as a run over all charts.
    const auto chart_index = static_cast<std::uint64_t>(chart);
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (chart_index + 1)));
    std::uniform_real_distribution<double> rate(-2.0, 2.0);

    const bool with_ms = chart == ChartKind::QuatReduced;
    std::vector<IdentityId> ids = {IdentityId::Prop1a, IdentityId::Prop1b, IdentityId::Prop1c,
                                   IdentityId::IdentShort, IdentityId::Coriolis};
    if (with_ms) ids.push_back(IdentityId::QuatMS);

    std::vector<IdentityReport> reports;
    for (IdentityId id : ids)
      reports.push_back({id, chart, samples, 0.0, tol, false, Vec3{}, Vec3{}});

    for (long k = 0; k < samples; ++k) {
      const GenCoords c{chart, sample_in_domain(chart, rng)};
      const Vec3 qdot{rate(rng), rate(rng), rate(rng)};
      const KinematicsEval ev = kinematics_eval(c);
      const double rate_scale = 1.0 + dot(qdot, qdot);

      auto record = [&](std::size_t idx, double value) {
        if (value > reports[idx].max_residual) {
          reports[idx].max_residual = value;
          reports[idx].worst_case_q = c.q;
          reports[idx].worst_case_qdot = qdot;
        }
      };

      record(0, max_abs(residual_prop1a(ev, qdot)) / rate_scale);
      record(1, max_abs(residual_prop1b(ev, qdot)) / rate_scale);
      const auto r1c = residual_prop1c(ev);
      record(2, std::max({max_abs(r1c[0]), max_abs(r1c[1]), max_abs(r1c[2])}));
      record(3, max_abs(residual_identshort(ev)));
      record(4, max_abs(residual_coriolis(ev, qdot, j_suite)) / rate_scale);
      if (with_ms) {
        const auto q = quat_lift(c);
        const Mat3 ms = transpose3(quat_m_matrix(c)) * ev.S - (8.0 / q[0]) * Mat3::identity();
        record(5, max_abs(ms));
      }
    }

    for (auto& r : reports) {
      r.passed = r.max_residual <= r.tolerance;
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace rigidbody
