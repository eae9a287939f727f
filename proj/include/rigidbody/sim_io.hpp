#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidbody/charts.hpp"
#include "rigidbody/dynamics.hpp"
#include "rigidbody/identities.hpp"
#include "rigidbody/integrate.hpp"

namespace rigidbody {

inline constexpr const char* kToolVersion = "0.1.0";

/// Parsed simulation config. `chart` is one of euler321 / euler313 / quat
/// for generalized-coordinate runs or "body" for the quaternion reference
/// integrator. Exactly one of q0 / attitude_quat and one of qdot0 / omega0
/// is set.
struct SimConfig {
  std::string chart;
  Mat3 J;
  TorqueProfile torque = TorqueZero{};
  std::optional<Vec3> q0;
  std::optional<std::array<double, 4>> attitude_quat;
  std::optional<Vec3> qdot0;
  std::optional<Vec3> omega0;
  double dt = 0.0;
  double t_final = 0.0;
  std::optional<std::uint64_t> seed;
};

std::optional<ChartKind> chart_kind_from_string(const std::string& name);

SimConfig parse_sim_config(const nlohmann::json& j);
SimConfig load_sim_config(const std::string& path);  // ConfigError on any problem

/// Physical initial condition implied by the config, independent of chart.
struct InitialCondition {
  Quat attitude;
  Vec3 omega;
};
InitialCondition canonical_initial(const SimConfig& cfg);

/// Initial state for a generalized-coordinate run in `chart`. Uses the
/// config's native (q, qdot) when they are given in that same chart;
/// otherwise converts through the canonical initial condition. May throw
/// the chart_convert / qdot_from_omega errors.
SimState generalized_initial(const SimConfig& cfg, ChartKind chart);
BodyState body_initial(const SimConfig& cfg);

/// Shortest round-trip decimal representation (<= 17 significant digits).
std::string format_double(double v);

/// Columns: t,q1,q2,q3,qd1,qd2,qd3,w1,w2,w3,R11..R33,energy,hx,hy,hz.
void write_csv(std::ostream& os, const std::vector<TrajectorySample>& samples);
void write_jsonl(std::ostream& os, const std::vector<TrajectorySample>& samples);

nlohmann::json verify_report_json(const std::vector<IdentityReport>& reports, long samples,
                                  std::uint64_t seed, double tol);

struct PairwiseCompare {
  std::string a;
  std::string b;
  CompareReport report;
};
nlohmann::json compare_report_json(const std::vector<PairwiseCompare>& pairs, double dt,
                                   double t_final, double threshold_rad);

}  // namespace rigidbody
