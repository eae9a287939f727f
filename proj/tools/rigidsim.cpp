// rigidsim: attitude dynamics in generalized coordinates.
//
// Subcommands:
//   verify    numerically check the kinematic identities per chart
//   simulate  integrate one formulation from a JSON config
//   compare   integrate every requested chart plus the body-frame
//             reference from the same initial condition and report
//             pairwise attitude discrepancies
//
// Exit codes: 0 ok, 1 identity failure, 2 bad flags or config, 3 gimbal
// lock, 4 output I/O failure, 5 attitude inexpressible in a chart.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rigidbody/sim_io.hpp"

namespace {

using namespace rigidbody;

constexpr double kCompareThresholdRad = 1e-6;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGimbalLock = 3;
constexpr int kExitIo = 4;
constexpr int kExitInexpressible = 5;

std::vector<ChartKind> charts_for(const std::string& name) {
  if (name == "all")
    return {ChartKind::Euler321, ChartKind::Euler313, ChartKind::QuatReduced};
  return {*chart_kind_from_string(name)};
}

bool write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out.flush());
}

void warn_if_unphysical(const Mat3& J) {
  if (!inertia_triangle_ok(J))
    std::cerr << "warning: inertia diagonal violates the triangle inequality"
                 " (not realizable by a physical mass distribution)\n";
}

int run_verify(long samples, std::uint64_t seed, double tol, const std::string& chart,
               const std::string& out_path) {
  const auto reports = run_identity_suite(charts_for(chart), samples, seed, tol);

  std::printf("%-10s %-12s %8s %14s %12s %s\n", "chart", "identity", "samples", "max_residual",
              "tolerance", "status");
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.passed;
    std::printf("%-10s %-12s %8ld %14.3e %12.3e %s\n", to_string(r.chart), to_string(r.identity),
                r.samples, r.max_residual, r.tolerance, r.passed ? "PASS" : "FAIL");
  }
  std::printf("%s\n", all ? "all identities verified" : "identity verification FAILED");

  if (!out_path.empty()) {
    const auto j = verify_report_json(reports, samples, seed, tol);
    if (!write_text_file(out_path, j.dump(2) + "\n")) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitIo;
    }
  }
  return all ? kExitOk : kExitIdentityFailure;
}

int write_trajectory(const std::string& path, const std::string& format,
                     const std::vector<TrajectorySample>& samples) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitIo;
  }
  if (format == "csv")
    write_csv(out, samples);
  else
    write_jsonl(out, samples);
  if (!out.flush()) {
    std::cerr << "error: short write to " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_simulate(const std::string& config_path, const std::string& out_path,
                 const std::string& format) {
  SimConfig cfg;
  try {
    cfg = load_sim_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  warn_if_unphysical(cfg.J);
  const RigidBodyParams params{cfg.J, cfg.torque};

  SimResult result;
  try {
    if (cfg.chart == "body") {
      result = simulate_body(body_initial(cfg), params, cfg.dt, cfg.t_final);
    } else {
      const SimState initial = generalized_initial(cfg, *chart_kind_from_string(cfg.chart));
      result = simulate_generalized(initial, params, cfg.dt, cfg.t_final);
    }
  } catch (const GimbalLock& e) {
    std::cerr << "error: initial state at gimbal lock: " << e.what() << "\n";
    return kExitGimbalLock;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const int io = write_trajectory(out_path, format, result.samples);
  if (io != kExitOk) return io;
  if (result.abort) {
    std::cerr << "gimbal lock at t = " << format_double(result.abort->t) << ": "
              << result.abort->reason << "\n";
    return kExitGimbalLock;
  }
  return kExitOk;
}

int run_compare(const std::string& config_path, const std::vector<std::string>& chart_names,
                const std::string& out_path) {
  SimConfig cfg;
  try {
    cfg = load_sim_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  warn_if_unphysical(cfg.J);
  const RigidBodyParams params{cfg.J, cfg.torque};

  // Body-frame reference plus each requested chart, all from the same
  // physical initial condition.
  BodyState ref_initial;
  std::vector<std::pair<std::string, SimState>> chart_runs;
  try {
    ref_initial = body_initial(cfg);
    for (const auto& name : chart_names) {
      const auto kind = chart_kind_from_string(name);
      if (!kind) {
        std::cerr << "error: unknown chart '" << name << "'\n";
        return kExitUsage;
      }
      chart_runs.emplace_back(name, generalized_initial(cfg, *kind));
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: initial attitude not expressible: " << e.what() << "\n";
    return kExitInexpressible;
  }

  std::vector<std::pair<std::string, SimResult>> runs;
  runs.emplace_back("body", simulate_body(ref_initial, params, cfg.dt, cfg.t_final));
  for (const auto& [name, initial] : chart_runs)
    runs.emplace_back(name, simulate_generalized(initial, params, cfg.dt, cfg.t_final));

  for (const auto& [name, result] : runs) {
    if (result.abort) {
      std::cerr << "error: chart " << name << " hit gimbal lock at t = "
                << format_double(result.abort->t) << "\n";
      return kExitGimbalLock;
    }
  }

  std::vector<PairwiseCompare> pairs;
  bool all = true;
  for (std::size_t i = 0; i < runs.size(); ++i)
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      PairwiseCompare pc{runs[i].first, runs[j].first,
                         compare_trajectories(runs[i].second.samples, runs[j].second.samples)};
      all = all && pc.report.max_rotation_angle_rad <= kCompareThresholdRad;
      std::printf("%-9s vs %-9s max angle %.3e rad at t=%-8g max |dw| %.3e rad/s\n",
                  pc.a.c_str(), pc.b.c_str(), pc.report.max_rotation_angle_rad,
                  pc.report.t_at_max_angle, pc.report.max_omega_diff);
      pairs.push_back(std::move(pc));
    }
  std::printf("%s (threshold %.1e rad)\n", all ? "formulations agree" : "formulations DISAGREE",
              kCompareThresholdRad);

  if (!out_path.empty()) {
    const auto j = compare_report_json(pairs, cfg.dt, cfg.t_final, kCompareThresholdRad);
    if (!write_text_file(out_path, j.dump(2) + "\n")) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitIo;
    }
  }
  return all ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigid-body attitude dynamics in generalized coordinates"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  long samples = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string chart = "all";
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "numerically verify the kinematic identities");
  verify->add_option("--samples", samples, "random configurations per chart")
      ->check(CLI::Range(1l, 100000000l));
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--tol", tol, "norm-scaled residual tolerance")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--chart", chart, "chart to check")
      ->check(CLI::IsMember({"all", "euler321", "euler313", "quat"}));
  verify->add_option("--out", verify_out, "write a JSON report here");

  std::string sim_config, sim_out, sim_format = "csv";
  auto* simulate = app.add_subcommand("simulate", "integrate one formulation from a config");
  simulate->add_option("--config", sim_config, "JSON simulation config")
      ->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--out", sim_out, "trajectory output file")->required();
  simulate->add_option("--format", sim_format, "trajectory format")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  std::string cmp_config, cmp_out;
  std::vector<std::string> cmp_charts = {"euler321", "euler313", "quat"};
  auto* compare =
      app.add_subcommand("compare", "compare charts against the body-frame reference");
  compare->add_option("--config", cmp_config, "JSON simulation config")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--charts", cmp_charts, "charts to run")->delimiter(',');
  compare->add_option("--out", cmp_out, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(samples, seed, tol, chart, verify_out);
    if (simulate->parsed()) return run_simulate(sim_config, sim_out, sim_format);
    return run_compare(cmp_config, cmp_charts, cmp_out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
