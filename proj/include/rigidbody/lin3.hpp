#pragma once

#include <array>
#include <cmath>

#include "rigidbody/errors.hpp"

namespace rigidbody {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }
constexpr Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double max_abs(const Vec3& a) {
  return std::max({std::fabs(a.x), std::fabs(a.y), std::fabs(a.z)});
}
inline bool all_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// 3x3 real matrix, row-major.
struct Mat3 {
  std::array<double, 9> e{};

  constexpr double operator()(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }
  double& operator()(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }

  constexpr Vec3 row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }
  constexpr Vec3 col(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }
  void set_col(int c, const Vec3& v) {
    (*this)(0, c) = v.x;
    (*this)(1, c) = v.y;
    (*this)(2, c) = v.z;
  }

  static constexpr Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
  static constexpr Mat3 diag(double a, double b, double c) {
    return Mat3{{a, 0, 0, 0, b, 0, 0, 0, c}};
  }
  static constexpr Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    return Mat3{{r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z}};
  }
  static constexpr Mat3 from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    return Mat3{{c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z}};
  }
};

constexpr Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}
constexpr Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}
constexpr Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = s * a.e[i];
  return r;
}

/// Cross-product matrix: skew(x) * y == cross(x, y).
constexpr Mat3 skew(const Vec3& v) {
  return Mat3{{0, -v.z, v.y, v.z, 0, -v.x, -v.y, v.x, 0}};
}

constexpr Mat3 transpose3(const Mat3& a) {
  return Mat3{{a.e[0], a.e[3], a.e[6], a.e[1], a.e[4], a.e[7], a.e[2], a.e[5], a.e[8]}};
}

constexpr Vec3 matvec3(const Mat3& a, const Vec3& x) {
  return {dot(a.row(0), x), dot(a.row(1), x), dot(a.row(2), x)};
}

constexpr Mat3 matmul3(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

constexpr Mat3 operator*(const Mat3& a, const Mat3& b) { return matmul3(a, b); }
constexpr Vec3 operator*(const Mat3& a, const Vec3& x) { return matvec3(a, x); }

constexpr double det3(const Mat3& a) { return dot(a.row(0), cross(a.row(1), a.row(2))); }

inline double max_abs(const Mat3& a) {
  double m = 0.0;
  for (double v : a.e) m = std::max(m, std::fabs(v));
  return m;
}

/// Induced infinity norm (max absolute row sum).
inline double opnorm_inf(const Mat3& a) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Vec3 r = a.row(i);
    m = std::max(m, std::fabs(r.x) + std::fabs(r.y) + std::fabs(r.z));
  }
  return m;
}

inline bool all_finite(const Mat3& a) {
  for (double v : a.e)
    if (!std::isfinite(v)) return false;
  return true;
}

/// Absolute determinant threshold below which solve3 refuses to invert.
inline constexpr double kSingularTol = 1e-12;

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Throws SingularMatrix when |det A| <= kSingularTol.
Vec3 solve3(const Mat3& a, const Vec3& b);

/// A^T (A x)^x A - (det A) x^x.  Zero for every A and x.
Mat3 lemma1_residual(const Mat3& a, const Vec3& x);

/// Column-cross matrix [A2 x A3  A3 x A1  A1 x A2].
/// Satisfies A^T C = (det A) I and C x^x = (A x)^x A for all x,
/// singular A included.
Mat3 cofactor_columns(const Mat3& a);

}  // namespace rigidbody
