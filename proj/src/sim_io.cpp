#include "rigidbody/sim_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

namespace rigidbody {

using nlohmann::json;

namespace {

Vec3 vec3_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number())
    throw ConfigError(what + ": expected an array of 3 numbers");
  Vec3 v{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  if (!all_finite(v)) throw ConfigError(what + ": non-finite value");
  return v;
}

Mat3 inertia_from(const json& j) {
  if (!j.is_object()) throw ConfigError("inertia: expected an object");
  if (j.contains("principal")) {
    const Vec3 p = vec3_from(j.at("principal"), "inertia.principal");
    return Mat3::diag(p.x, p.y, p.z);
  }
  if (j.contains("matrix")) {
    const auto& m = j.at("matrix");
    if (!m.is_array() || m.size() != 9)
      throw ConfigError("inertia.matrix: expected 9 numbers, row-major");
    Mat3 J;
    for (std::size_t i = 0; i < 9; ++i) {
      if (!m[i].is_number()) throw ConfigError("inertia.matrix: expected 9 numbers, row-major");
      J.e[i] = m[i].get<double>();
    }
    return J;
  }
  throw ConfigError("inertia: need either 'principal' or 'matrix'");
}

TorqueProfile torque_from(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("torque: expected {kind: ...}");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return TorqueZero{};
  if (kind == "constant") return TorqueConstant{vec3_from(j.at("value"), "torque.value")};
  if (kind == "piecewise_linear") {
    TorquePiecewiseLinear p;
    if (!j.contains("points") || !j.at("points").is_array() || j.at("points").empty())
      throw ConfigError("torque.points: expected a non-empty array");
    for (const auto& pt : j.at("points")) {
      if (!pt.is_object() || !pt.contains("t") || !pt.contains("value"))
        throw ConfigError("torque.points: each point needs 't' and 'value'");
      p.points.emplace_back(pt.at("t").get<double>(), vec3_from(pt.at("value"), "torque.points"));
    }
    return p;
  }
  if (kind == "spin_up") {
    return TorqueSpinUp{vec3_from(j.at("axis"), "torque.axis"),
                        j.at("magnitude").get<double>(), j.at("t_on").get<double>(),
                        j.at("t_off").get<double>()};
  }
  throw ConfigError("torque.kind: unknown kind '" + kind + "'");
}

}  // namespace

std::optional<ChartKind> chart_kind_from_string(const std::string& name) {
  if (name == "euler321") return ChartKind::Euler321;
  if (name == "euler313") return ChartKind::Euler313;
  if (name == "quat") return ChartKind::QuatReduced;
  return std::nullopt;
}

SimConfig parse_sim_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  SimConfig cfg;
  try {
    cfg.chart = j.at("chart").get<std::string>();
    if (cfg.chart != "body" && !chart_kind_from_string(cfg.chart))
      throw ConfigError("config.chart: expected euler321, euler313, quat or body");

    cfg.J = inertia_from(j.at("inertia"));
    validate_inertia(cfg.J);

    if (j.contains("torque")) cfg.torque = torque_from(j.at("torque"));
    validate_torque(cfg.torque);

    const auto& init = j.at("initial");
    if (init.contains("q") == init.contains("attitude_quat"))
      throw ConfigError("config.initial: exactly one of 'q' or 'attitude_quat'");
    if (init.contains("q")) {
      cfg.q0 = vec3_from(init.at("q"), "initial.q");
    } else {
      const auto& a = init.at("attitude_quat");
      if (!a.is_array() || a.size() != 4)
        throw ConfigError("initial.attitude_quat: expected 4 numbers");
      cfg.attitude_quat = {a[0].get<double>(), a[1].get<double>(), a[2].get<double>(),
                           a[3].get<double>()};
      double n = 0.0;
      for (double v : *cfg.attitude_quat) {
        if (!std::isfinite(v)) throw ConfigError("initial.attitude_quat: non-finite value");
        n += v * v;
      }
      if (std::fabs(std::sqrt(n) - 1.0) > 1e-9)
        throw ConfigError("initial.attitude_quat: not a unit quaternion");
    }

    const auto& rate = j.at("initial_rate");
    if (rate.contains("qdot") == rate.contains("omega"))
      throw ConfigError("config.initial_rate: exactly one of 'qdot' or 'omega'");
    if (rate.contains("qdot"))
      cfg.qdot0 = vec3_from(rate.at("qdot"), "initial_rate.qdot");
    else
      cfg.omega0 = vec3_from(rate.at("omega"), "initial_rate.omega");

    cfg.dt = j.at("dt").get<double>();
    cfg.t_final = j.at("t_final").get<double>();
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ConfigError("config.dt: must be > 0");
    if (!(cfg.t_final >= cfg.dt) || !std::isfinite(cfg.t_final))
      throw ConfigError("config.t_final: must be >= dt");

    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  if (cfg.chart == "body" && cfg.q0)
    throw ConfigError("config: chart 'body' takes 'attitude_quat', not chart coordinates 'q'");
  if (cfg.chart == "body" && cfg.qdot0)
    throw ConfigError("config: chart 'body' takes 'omega', not chart rates 'qdot'");
  if (cfg.qdot0 && !cfg.q0)
    throw ConfigError("config: 'qdot' initial rate requires a 'q' initial attitude");
  return cfg;
}

SimConfig load_sim_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  return parse_sim_config(j);
}

InitialCondition canonical_initial(const SimConfig& cfg) {
  InitialCondition ic;
  if (cfg.attitude_quat) {
    const auto& a = *cfg.attitude_quat;
    ic.attitude = normalized(Quat{a[0], a[1], a[2], a[3]});
  } else {
    const auto kind = chart_kind_from_string(cfg.chart);
    if (!kind) throw ConfigError("config: chart coordinates given without a coordinate chart");
    ic.attitude = attitude_of(GenCoords{*kind, *cfg.q0});
  }
  if (cfg.omega0) {
    ic.omega = *cfg.omega0;
  } else {
    const auto kind = chart_kind_from_string(cfg.chart);
    ic.omega = omega_from(GenCoords{*kind, *cfg.q0}, *cfg.qdot0);
  }
  return ic;
}

SimState generalized_initial(const SimConfig& cfg, ChartKind chart) {
  const bool native = chart_kind_from_string(cfg.chart) == chart;
  SimState st;
  st.t = 0.0;
  if (native && cfg.q0)
    st.coords = GenCoords{chart, *cfg.q0};
  else
    st.coords = coords_from_attitude(canonical_initial(cfg).attitude, chart);
  if (native && cfg.qdot0)
    st.qdot = *cfg.qdot0;
  else
    st.qdot = qdot_from_omega(st.coords, canonical_initial(cfg).omega);
  return st;
}

BodyState body_initial(const SimConfig& cfg) {
  const InitialCondition ic = canonical_initial(cfg);
  return BodyState{0.0, ic.attitude, ic.omega};
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const std::vector<TrajectorySample>& samples) {
  os << "t,q1,q2,q3,qd1,qd2,qd3,w1,w2,w3,"
        "R11,R12,R13,R21,R22,R23,R31,R32,R33,energy,hx,hy,hz\n";
  for (const auto& s : samples) {
    os << format_double(s.t);
    const double cols[] = {s.q.x,          s.q.y,          s.q.z,     s.qdot.x,  s.qdot.y,
                           s.qdot.z,       s.omega.x,      s.omega.y, s.omega.z, s.R(0, 0),
                           s.R(0, 1),      s.R(0, 2),      s.R(1, 0), s.R(1, 1), s.R(1, 2),
                           s.R(2, 0),      s.R(2, 1),      s.R(2, 2), s.energy,  s.h_inertial.x,
                           s.h_inertial.y, s.h_inertial.z};
    for (double c : cols) os << ',' << format_double(c);
    os << '\n';
  }
}

namespace {

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json to_json(const Mat3& m) {
  return json::array({json::array({m(0, 0), m(0, 1), m(0, 2)}),
                      json::array({m(1, 0), m(1, 1), m(1, 2)}),
                      json::array({m(2, 0), m(2, 1), m(2, 2)})});
}

}  // namespace

void write_jsonl(std::ostream& os, const std::vector<TrajectorySample>& samples) {
  for (const auto& s : samples) {
    json line{{"t", s.t},         {"q", to_json(s.q)},
              {"qdot", to_json(s.qdot)}, {"omega", to_json(s.omega)},
              {"R", to_json(s.R)},       {"energy", s.energy},
              {"h_inertial", to_json(s.h_inertial)}};
    os << line.dump() << '\n';
  }
}

json verify_report_json(const std::vector<IdentityReport>& reports, long samples,
                        std::uint64_t seed, double tol) {
  json out{{"tool_version", kToolVersion},
           {"seed", seed},
           {"tolerance", tol},
           {"samples", samples},
           {"reports", json::array()}};
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.passed;
    out["reports"].push_back({{"identity", to_string(r.identity)},
                              {"chart", to_string(r.chart)},
                              {"samples", r.samples},
                              {"max_residual", r.max_residual},
                              {"tolerance", r.tolerance},
                              {"passed", r.passed},
                              {"worst_case_q", to_json(r.worst_case_q)},
                              {"worst_case_qdot", to_json(r.worst_case_qdot)}});
  }
  out["all_passed"] = all;
  return out;
}

json compare_report_json(const std::vector<PairwiseCompare>& pairs, double dt, double t_final,
                         double threshold_rad) {
  json out{{"tool_version", kToolVersion},
           {"dt", dt},
           {"t_final", t_final},
           {"threshold_rad", threshold_rad},
           {"pairs", json::array()}};
  bool all = true;
  for (const auto& p : pairs) {
    const bool ok = p.report.max_rotation_angle_rad <= threshold_rad;
    all = all && ok;
    out["pairs"].push_back({{"a", p.a},
                            {"b", p.b},
                            {"max_rotation_angle_rad", p.report.max_rotation_angle_rad},
                            {"t_at_max_angle", p.report.t_at_max_angle},
                            {"max_omega_diff", p.report.max_omega_diff},
                            {"t_at_max_omega", p.report.t_at_max_omega},
                            {"samples", p.report.samples},
                            {"passed", ok}});
  }
  out["all_passed"] = all;
  return out;
}

}  // namespace rigidbody
