#include "rigidbody/lin3.hpp"

#include <cmath>
#include <utility>

namespace rigidbody {

Vec3 solve3(const Mat3& a, const Vec3& b) {
  if (std::fabs(det3(a)) <= kSingularTol) {
    throw SingularMatrix("solve3: |det| <= 1e-12");
  }

  double m[3][4] = {{a(0, 0), a(0, 1), a(0, 2), b.x},
                    {a(1, 0), a(1, 1), a(1, 2), b.y},
                    {a(2, 0), a(2, 1), a(2, 2), b.z}};

  for (int k = 0; k < 3; ++k) {
    int pivot = k;
    for (int i = k + 1; i < 3; ++i)
      if (std::fabs(m[i][k]) > std::fabs(m[pivot][k])) pivot = i;
    if (pivot != k)
      for (int j = k; j < 4; ++j) std::swap(m[k][j], m[pivot][j]);
    for (int i = k + 1; i < 3; ++i) {
      const double f = m[i][k] / m[k][k];
      for (int j = k; j < 4; ++j) m[i][j] -= f * m[k][j];
    }
  }

  Vec3 x;
  for (int i = 2; i >= 0; --i) {
    double s = m[i][3];
    for (int j = i + 1; j < 3; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  return x;
}

Mat3 lemma1_residual(const Mat3& a, const Vec3& x) {
  const Mat3 lhs = transpose3(a) * skew(a * x) * a;
  return lhs - det3(a) * skew(x);
}

Mat3 cofactor_columns(const Mat3& a) {
  return Mat3::from_cols(cross(a.col(1), a.col(2)), cross(a.col(2), a.col(0)),
                         cross(a.col(0), a.col(1)));
}

}  // namespace rigidbody
