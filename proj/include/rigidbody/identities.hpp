#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "rigidbody/charts.hpp"
#include "rigidbody/lin3.hpp"

namespace rigidbody {

/// The kinematic identities checked numerically, per chart:
///
///   Prop1a      Sdot + (S qdot)^x S = [dS1 qdot  dS2 qdot  dS3 qdot]
///   Prop1b      sum_i qdot_i dSi + [S2xS3 S3xS1 S1xS2] qdot^x = [dSi qdot]_i
///   Prop1c      dS1/dq2 - dS2/dq1 = S1 x S2  (and the other two pairs)
///   IdentShort  S^T [d3S2-d2S3  d1S3-d3S1  d2S1-d1S2] = det(S) I
///   Coriolis    S^-T (Sdot^T J S qdot - [qdot^T dSi^T J S qdot]_i)
///               = omega x J omega
///   QuatMS      M(q)^T S(q) = (8/q1) I   (reduced quaternion chart only)
enum class IdentityId { Prop1a, Prop1b, Prop1c, IdentShort, Coriolis, QuatMS };

const char* to_string(IdentityId id);

struct IdentityReport {
  IdentityId identity = IdentityId::Prop1a;
  ChartKind chart = ChartKind::Euler321;
  long samples = 0;
  double max_residual = 0.0;  // norm-scaled, infinity norm over entries
  double tolerance = 0.0;
  bool passed = false;
  Vec3 worst_case_q;
  Vec3 worst_case_qdot;
};

Mat3 residual_prop1a(const KinematicsEval& ev, const Vec3& qdot);
Mat3 residual_prop1a(const GenCoords& c, const Vec3& qdot);

Mat3 residual_prop1b(const KinematicsEval& ev, const Vec3& qdot);
Mat3 residual_prop1b(const GenCoords& c, const Vec3& qdot);

std::array<Vec3, 3> residual_prop1c(const KinematicsEval& ev);
std::array<Vec3, 3> residual_prop1c(const GenCoords& c);

Mat3 residual_identshort(const KinematicsEval& ev);
Mat3 residual_identshort(const GenCoords& c);

Vec3 residual_coriolis(const KinematicsEval& ev, const Vec3& qdot, const Mat3& J);
Vec3 residual_coriolis(const GenCoords& c, const Vec3& qdot, const Mat3& J);

/// M(q) = (4/q1) [[q1, q4, -q3], [-q4, q1, q2], [q3, -q2, q1]];
/// M^T S = (8/q1) I and det M = 64/q1^2. QuatReduced only.
Mat3 quat_m_matrix(const GenCoords& c);

/// Central differences (S(q + h e_i) - S(q - h e_i)) / 2h; the independent
/// oracle for s_partials.
std::array<Mat3, 3> finite_diff_partials(const GenCoords& c, double h);

/// Random in-domain coordinates. Euler charts are rejection-sampled to
/// |det S| >= 0.05; the reduced quaternion chart to |q| <= 0.9 so S stays
/// well conditioned.
Vec3 sample_in_domain(ChartKind chart, std::mt19937_64& rng);

/// Evaluates every identity at `samples` random in-domain points per chart
/// (QuatMS on the quaternion chart only) and reports the worst norm-scaled
/// residuals. Deterministic for a fixed seed, independent of chart subset.
/// The Coriolis identity uses J = diag(1, 2, 3).
std::vector<IdentityReport> run_identity_suite(const std::vector<ChartKind>& charts, long samples,
                                               std::uint64_t seed, double tol);

}  // namespace rigidbody
