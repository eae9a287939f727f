#pragma once

#include <array>

#include "rigidbody/lin3.hpp"
#include "rigidbody/quat.hpp"

namespace rigidbody {

/// Attitude parameterizations with a 3-vector of generalized coordinates q
/// and body angular velocity omega = S(q) qdot.
///
///   Euler321     q = [phi, theta, psi]   (bank, elevation, azimuth; rad)
///   Euler313     q = [psi, theta, phi]   (spin, nutation, precession; rad)
///   QuatReduced  q = [q2, q3, q4]        (quaternion vector part; q1 > 0
///                                         dependent, so |q| < 1)
enum class ChartKind { Euler321, Euler313, QuatReduced };

const char* to_string(ChartKind kind);

struct GenCoords {
  ChartKind chart = ChartKind::Euler321;
  Vec3 q;
};

/// S(q), its three coordinate partials, and the closed-form determinant
/// (cos theta / sin theta / 8 over q1 for the three charts).
struct KinematicsEval {
  Mat3 S;
  std::array<Mat3, 3> dS;
  double detS = 0.0;
};

/// |det S| at or below this is treated as gimbal lock for inversion and
/// simulation abort. Chart-level threshold, looser than lin3's kSingularTol.
inline constexpr double kGimbalTol = 1e-8;

/// Kinematic matrix S(q) with omega = S(q) qdot.
Mat3 s_matrix(const GenCoords& c);

/// Analytic partials [dS/dq1, dS/dq2, dS/dq3].
std::array<Mat3, 3> s_partials(const GenCoords& c);

/// Closed-form det S(q).
double s_det(const GenCoords& c);

/// S, partials and determinant in one evaluation.
KinematicsEval kinematics_eval(const GenCoords& c);

Vec3 omega_from(const GenCoords& c, const Vec3& qdot);

/// qdot = S(q)^-1 omega. Throws GimbalLock when |det S| <= kGimbalTol.
Vec3 qdot_from_omega(const GenCoords& c, const Vec3& omega);

/// Direction-cosine matrix mapping inertial to body components.
/// Consistent with s_matrix in the sense Rdot = -(S qdot)^x R along any
/// smooth path q(t).
///
/// Compositions (rightmost rotation applied first, elementary frame
/// rotations R1/R2/R3):
///   Euler321     R = R1(phi) R2(theta) R3(psi)
///   Euler313     R = R3(psi) R1(theta) R3(phi)
///   QuatReduced  R = (q1^2 - |v|^2) I + 2 v v^T - 2 q1 v^x,  v = [q2,q3,q4]
Mat3 rotation_matrix(const GenCoords& c);

/// Full Euler-parameter vector [q1, q2, q3, q4] with q1 = sqrt(1 - |q|^2).
/// QuatReduced only; throws DomainError otherwise.
std::array<double, 4> quat_lift(const GenCoords& c);

/// Attitude of the configuration as a unit quaternion (scalar part >= 0).
Quat attitude_of(const GenCoords& c);

/// Extracts chart coordinates from a direction-cosine matrix.
/// Throws GimbalLock when the target chart is singular at this attitude,
/// AmbiguousAttitude for the 3-1-3 sin(theta) = 0 tie-break, and
/// DomainError for QuatReduced when the eigenangle is within ~1e-6 of pi.
/// The exact identity attitude maps to zero coordinates in every chart.
GenCoords coords_from_rotation(const Mat3& r, ChartKind target);

GenCoords coords_from_attitude(const Quat& q, ChartKind target);

/// Re-expresses the same attitude in another chart.
GenCoords chart_convert(const GenCoords& c, ChartKind target);

}  // namespace rigidbody
