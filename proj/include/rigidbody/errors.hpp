#pragma once

#include <stdexcept>
#include <string>

namespace rigidbody {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A 3x3 system whose determinant is below the singularity threshold.
struct SingularMatrix : Error {
  using Error::Error;
};

/// Coordinates outside the chart domain (e.g. reduced Euler parameters
/// with q2^2 + q3^2 + q4^2 >= 1, or an attitude with eigenangle pi).
struct DomainError : Error {
  using Error::Error;
};

/// The kinematic matrix S(q) is singular: q-dot is unrecoverable from omega.
struct GimbalLock : Error {
  using Error::Error;
};

/// A chart conversion that would require an arbitrary tie-break
/// (3-1-3 at sin(theta) = 0, where only psi + phi is determined).
/// This is the gimbal-lock set of the target chart, hence the base class.
struct AmbiguousAttitude : GimbalLock {
  using GimbalLock::GimbalLock;
};

/// Inertia matrix is not symmetric positive definite.
struct InvalidInertia : Error {
  using Error::Error;
};

/// Trajectories compared on different time grids.
struct GridMismatch : Error {
  using Error::Error;
};

/// An integrator stage produced a non-finite derivative.
struct NonFiniteDerivative : Error {
  using Error::Error;
};

/// Malformed or inconsistent simulation config.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace rigidbody
