#include <doctest.h>

#include <cmath>
#include <random>

#include "rigidbody/identities.hpp"

using namespace rigidbody;

namespace {

const ChartKind kAllCharts[] = {ChartKind::Euler321, ChartKind::Euler313,
                                ChartKind::QuatReduced};

double max_abs3(const std::array<Vec3, 3>& r) {
  return std::max({max_abs(r[0]), max_abs(r[1]), max_abs(r[2])});
}

Vec3 random_rate(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("prop1a vanishes") {
  // qdot = 0 kills every term.
  CHECK(max_abs(residual_prop1a(GenCoords{ChartKind::Euler313, {0.4, 1.1, -0.2}}, Vec3{})) ==
        0.0);

  CHECK(max_abs(residual_prop1a(GenCoords{ChartKind::Euler321, {0.3, 0.4, 0.5}},
                                Vec3{1, 2, 3})) <= 1e-12);

  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const GenCoords c{ChartKind::QuatReduced, sample_in_domain(ChartKind::QuatReduced, rng)};
    CHECK(max_abs(residual_prop1a(c, random_rate(rng))) <= 1e-10);
  }
}

TEST_CASE("prop1b vanishes and matches prop1a") {
  CHECK(max_abs(residual_prop1b(GenCoords{ChartKind::Euler321, {1.0, 0.2, 0.0}}, Vec3{})) == 0.0);

  CHECK(max_abs(residual_prop1b(GenCoords{ChartKind::Euler313, {0.2, 1.0, 0.3}},
                                Vec3{-1, 0.5, 2})) <= 1e-10);

  // (a) and (b) differ by the column-cross identity
  // (S qdot)^x S = cofactor_columns(S) qdot^x, so their residuals agree
  // to rounding.
  std::mt19937_64 rng(42);
  for (ChartKind chart : kAllCharts) {
    for (int i = 0; i < 300; ++i) {
      const GenCoords c{chart, sample_in_domain(chart, rng)};
      const Vec3 qdot = random_rate(rng);
      const KinematicsEval ev = kinematics_eval(c);
      const double ns = opnorm_inf(ev.S);
      const double scale = 1.0 + ns * ns * max_abs(qdot);
      CHECK(max_abs(residual_prop1b(ev, qdot) - residual_prop1a(ev, qdot)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("prop1a is linear in qdot") {
  std::mt19937_64 rng(11);
  for (ChartKind chart : kAllCharts) {
    const GenCoords c{chart, sample_in_domain(chart, rng)};
    const Vec3 qdot = random_rate(rng);
    const KinematicsEval ev = kinematics_eval(c);
    const Mat3 base = residual_prop1a(ev, qdot);
    for (double alpha : {-1.0, 2.0, 10.0}) {
      const Mat3 scaled = residual_prop1a(ev, alpha * qdot);
      CHECK(max_abs(scaled - alpha * base) <= 1e-11 * (1.0 + std::fabs(alpha) * max_abs(base)));
    }
  }
}

TEST_CASE("prop1c vanishes on all charts") {
  std::mt19937_64 rng(42);
  for (ChartKind chart : kAllCharts) {
    for (int i = 0; i < 1000; ++i) {
      const GenCoords c{chart, sample_in_domain(chart, rng)};
      CHECK(max_abs3(residual_prop1c(c)) <= 1e-11);
    }
  }
}

TEST_CASE("identshort vanishes") {
  // Reduced quaternion at the origin: S^T (inner) = 8 I = det(S) I.
  CHECK(max_abs(residual_identshort(GenCoords{ChartKind::QuatReduced, {0, 0, 0}})) <= 1e-14);

  CHECK(max_abs(residual_identshort(GenCoords{ChartKind::Euler321, {0.5, 0.7, 0.1}})) <= 1e-12);

  // Holds even where det S is tiny (near-singular but in-domain).
  CHECK(max_abs(residual_identshort(GenCoords{ChartKind::Euler313, {0.4, 1e-3, 0.9}})) <= 1e-10);
}

TEST_CASE("coriolis identity") {
  const Mat3 j = Mat3::diag(1, 2, 3);

  CHECK(max_abs(residual_coriolis(GenCoords{ChartKind::Euler321, {0.2, 0.3, 0.4}}, Vec3{}, j)) ==
        0.0);

  // Holds for any J, e.g. the identity inertia with qdot along each axis.
  for (int i = 0; i < 3; ++i) {
    Vec3 e;
    e[i] = 2.0;
    CHECK(max_abs(residual_coriolis(GenCoords{ChartKind::Euler321, {0.3, 0.5, -0.2}}, e,
                                    Mat3::identity())) <= 1e-12);
  }

  std::mt19937_64 rng(42);
  for (ChartKind chart : kAllCharts) {
    for (int i = 0; i < 1000; ++i) {
      const GenCoords c{chart, sample_in_domain(chart, rng)};
      const Vec3 qdot = random_rate(rng);
      CHECK(max_abs(residual_coriolis(c, qdot, j)) <= 1e-9 * (1.0 + dot(qdot, qdot)));
    }
  }
}

TEST_CASE("coriolis residual is small for every SPD inertia") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::uniform_real_distribution<double> diag(0.5, 5.0);
  for (ChartKind chart : kAllCharts) {
    const GenCoords c{chart, sample_in_domain(chart, rng)};
    const Vec3 qdot = random_rate(rng);
    for (int k = 0; k < 10; ++k) {
      // A^T A + d I is symmetric positive definite.
      Mat3 a;
      for (auto& e : a.e) e = entry(rng);
      const Mat3 j = transpose3(a) * a + Mat3::diag(diag(rng), diag(rng), diag(rng));
      CHECK(max_abs(residual_coriolis(c, qdot, j)) <=
            1e-9 * (1.0 + dot(qdot, qdot)) * (1.0 + opnorm_inf(j)));
    }
  }
}

TEST_CASE("coriolis rejects bad inertia") {
  const GenCoords c{ChartKind::Euler321, {0.1, 0.2, 0.3}};
  Mat3 asym = Mat3::diag(1, 2, 3);
  asym(0, 1) = 0.5;  // not symmetric
  CHECK_THROWS_AS(residual_coriolis(c, Vec3{1, 0, 0}, asym), InvalidInertia);
  CHECK_THROWS_AS(residual_coriolis(c, Vec3{1, 0, 0}, Mat3::diag(-1, 2, 3)), InvalidInertia);

  const GenCoords locked{ChartKind::Euler321, {0.0, 1.5707963267948966, 0.0}};
  CHECK_THROWS_AS(residual_coriolis(locked, Vec3{1, 0, 0}, Mat3::diag(1, 2, 3)), GimbalLock);
}

TEST_CASE("quaternion M matrix") {
  // M(0) = 4 I and M^T S = 8 I at the identity attitude.
  const GenCoords origin{ChartKind::QuatReduced, {0, 0, 0}};
  CHECK(max_abs(quat_m_matrix(origin) - 4.0 * Mat3::identity()) == 0.0);
  CHECK(max_abs(transpose3(quat_m_matrix(origin)) * s_matrix(origin) -
                8.0 * Mat3::identity()) == 0.0);

  // det M = 64 / q1^2: q = [0.6,0,0] has q1 = 0.8, so det M = 100.
  CHECK(det3(quat_m_matrix({ChartKind::QuatReduced, {0.6, 0, 0}})) ==
        doctest::Approx(100.0).epsilon(1e-12));

  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const GenCoords c{ChartKind::QuatReduced, sample_in_domain(ChartKind::QuatReduced, rng)};
    const auto lift = quat_lift(c);
    const Mat3 ms = transpose3(quat_m_matrix(c)) * s_matrix(c);
    CHECK(max_abs(ms - (8.0 / lift[0]) * Mat3::identity()) <= 1e-10);
    CHECK(det3(quat_m_matrix(c)) ==
          doctest::Approx(64.0 / (lift[0] * lift[0])).epsilon(1e-10));
  }

  CHECK_THROWS_AS(quat_m_matrix({ChartKind::Euler321, {0, 0, 0}}), DomainError);
}

TEST_CASE("finite differences: constant columns and convergence order") {
  // 3-2-1 S1 = e1 is constant: its finite-difference partials vanish.
  const auto fd = finite_diff_partials({ChartKind::Euler321, {0.3, 0.4, 0.5}}, 1e-6);
  for (int i = 0; i < 3; ++i) CHECK(max_abs(fd[i].col(0)) == 0.0);

  // Central differences are second order: errors shrink ~100x from
  // h = 1e-3 to h = 1e-4.
  for (ChartKind chart : kAllCharts) {
    const GenCoords c{chart, {0.3, 0.4, 0.2}};
    const auto exact = s_partials(c);
    auto err = [&](double h) {
      const auto approx = finite_diff_partials(c, h);
      double e = 0.0;
      for (int i = 0; i < 3; ++i) e = std::max(e, max_abs(approx[i] - exact[i]));
      return e;
    };
    const double ratio = err(1e-3) / err(1e-4);
    CHECK(ratio > 50.0);
    CHECK(ratio < 200.0);
  }

  // Agreement at h = 1e-6.
  const GenCoords cq{ChartKind::QuatReduced, {0.1, 0.2, 0.3}};
  const auto a = s_partials(cq);
  const auto f = finite_diff_partials(cq, 1e-6);
  for (int i = 0; i < 3; ++i) CHECK(max_abs(a[i] - f[i]) <= 1e-7);
}

TEST_CASE("run_identity_suite") {
  const std::vector<ChartKind> all(std::begin(kAllCharts), std::end(kAllCharts));

  const auto reports = run_identity_suite(all, 1, 42, 1e-9);
  CHECK(reports.size() == 16);  // 5 identities x 3 charts + QuatMS
  for (const auto& r : reports) CHECK(r.passed);

  // Strict zero tolerance: floating point never hits it for generic inputs.
  const auto strict = run_identity_suite(all, 100, 42, 0.0);
  for (const auto& r : strict) CHECK_FALSE(r.passed);

  // Same seed twice: identical reports.
  const auto a = run_identity_suite(all, 50, 7, 1e-9);
  const auto b = run_identity_suite(all, 50, 7, 1e-9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].max_residual == b[i].max_residual);
    CHECK(max_abs(a[i].worst_case_q - b[i].worst_case_q) == 0.0);
  }

  // A single-chart run reproduces the same stream as the full run.
  const auto only_quat = run_identity_suite({ChartKind::QuatReduced}, 50, 7, 1e-9);
  CHECK(only_quat.size() == 6);
  CHECK(only_quat.back().max_residual == b.back().max_residual);
}

TEST_CASE("negative control: corrupted chart fails prop1c") {
  // 3-2-1 with the S2 column negated (and its partials to match) is not a
  // valid kinematic parameterization; prop1c must catch it.
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const GenCoords c{ChartKind::Euler321, sample_in_domain(ChartKind::Euler321, rng)};
    KinematicsEval ev = kinematics_eval(c);
    ev.S.set_col(1, -1.0 * ev.S.col(1));
    for (auto& d : ev.dS) d.set_col(1, -1.0 * d.col(1));
    CHECK(max_abs3(residual_prop1c(ev)) >= 0.1);
  }
}

}  // TEST_SUITE
