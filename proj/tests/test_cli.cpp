// End-to-end checks of the rigidsim command-line contract: exit codes,
// trajectory file content, and the compare workflow.
//
// Usage: cli_tests [--rigidsim PATH]

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
  std::printf("%s %s\n", ok ? "ok  " : "FAIL", what.c_str());
  if (!ok) ++g_failures;
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -2;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  std::string rigidsim = "./rigidsim";
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--rigidsim") rigidsim = argv[i + 1];

  const fs::path tmp = fs::temp_directory_path() / ("rigidsim_cli_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  auto path = [&](const char* name) { return (tmp / name).string(); };

  // verify: tolerance zero is accepted but unattainable.
  check(run_command(rigidsim + " verify --samples 20 --tol 0 > /dev/null 2>&1") == 1,
        "verify --tol 0 exits 1");
  check(run_command(rigidsim + " verify --samples 0 > /dev/null 2>&1") == 2,
        "verify --samples 0 exits 2");

  // identical flags produce byte-identical report files.
  {
    const std::string flags = " verify --samples 100 --seed 7 --tol 1e-9 --out ";
    run_command(rigidsim + flags + path("v1.json") + " > /dev/null 2>&1");
    run_command(rigidsim + flags + path("v2.json") + " > /dev/null 2>&1");
    check(run_command("cmp -s " + path("v1.json") + " " + path("v2.json")) == 0,
          "verify reports are byte-identical across runs");
  }

  // simulate: a body at rest writes rows identical except for time.
  {
    const json cfg{{"chart", "euler321"},
                   {"inertia", {{"principal", {2.0, 3.0, 4.0}}}},
                   {"initial", {{"q", {0.3, 0.2, -0.4}}}},
                   {"initial_rate", {{"omega", {0.0, 0.0, 0.0}}}},
                   {"torque", {{"kind", "zero"}}},
                   {"dt", 0.01},
                   {"t_final", 0.5}};
    std::ofstream(path("rest.json")) << cfg.dump();
    const int rc = run_command(rigidsim + " simulate --config " + path("rest.json") + " --out " +
                               path("rest.csv") + " > /dev/null 2>&1");
    const auto rows = read_csv(path("rest.csv"));
    bool frozen = rc == 0 && rows.size() == 52;
    for (std::size_t i = 2; frozen && i < rows.size(); ++i)
      for (std::size_t j = 1; j < rows[i].size(); ++j)
        frozen = frozen && rows[i][j] == rows[1][j];
    check(frozen, "rest config rows identical except t");
  }

  // simulate: axisymmetric body, w1 column matches cos(2t).
  {
    const json cfg{{"chart", "body"},
                   {"inertia", {{"principal", {1.0, 1.0, 2.0}}}},
                   {"initial", {{"attitude_quat", {1.0, 0.0, 0.0, 0.0}}}},
                   {"initial_rate", {{"omega", {1.0, 0.0, 2.0}}}},
                   {"torque", {{"kind", "zero"}}},
                   {"dt", 0.001},
                   {"t_final", 2.0}};
    std::ofstream(path("axi.json")) << cfg.dump();
    const int rc = run_command(rigidsim + " simulate --config " + path("axi.json") + " --out " +
                               path("axi.csv") + " > /dev/null 2>&1");
    const auto rows = read_csv(path("axi.csv"));
    double worst = 1e300;
    if (rc == 0 && rows.size() == 2002) {
      worst = 0.0;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        const double t = std::stod(rows[i][0]);
        const double w1 = std::stod(rows[i][7]);
        worst = std::max(worst, std::fabs(w1 - std::cos(2.0 * t)));
      }
    }
    check(worst <= 1e-6, "axisymmetric w1 column matches cos(2t)");

    // compare: 1 s tumble clear of every singular set agrees across all
    // charts and the body reference.
    json cmp_cfg = cfg;
    cmp_cfg["initial"]["attitude_quat"] = {std::cos(0.4), std::sin(0.4), 0.0, 0.0};
    cmp_cfg["t_final"] = 1.0;
    std::ofstream(path("cmp.json")) << cmp_cfg.dump();
    const int rc_cmp = run_command(rigidsim + " compare --config " + path("cmp.json") +
                                   " --charts euler321,euler313,quat --out " + path("cmp_out.json") +
                                   " > /dev/null 2>&1");
    json rep;
    std::ifstream in(path("cmp_out.json"));
    if (in) in >> rep;
    bool angles_ok = rc_cmp == 0 && rep.value("all_passed", false) &&
                     rep.at("pairs").size() == 6;
    if (angles_ok)
      for (const auto& p : rep.at("pairs"))
        angles_ok = angles_ok && p.at("max_rotation_angle_rad").get<double>() <= 1e-6;
    check(angles_ok, "compare across all charts exits 0 with angles <= 1e-6");
  }

  // compare: rest config against the quat chart alone, zero discrepancy.
  {
    const json cfg{{"chart", "quat"},
                   {"inertia", {{"principal", {1.0, 2.0, 3.0}}}},
                   {"initial", {{"q", {0.1, 0.0, 0.2}}}},
                   {"initial_rate", {{"omega", {0.0, 0.0, 0.0}}}},
                   {"dt", 0.01},
                   {"t_final", 0.2}};
    std::ofstream(path("rest_cmp.json")) << cfg.dump();
    const int rc = run_command(rigidsim + " compare --config " + path("rest_cmp.json") +
                               " --charts quat --out " + path("rest_cmp_out.json") +
                               " > /dev/null 2>&1");
    json rep;
    std::ifstream in(path("rest_cmp_out.json"));
    if (in) in >> rep;
    double angle = 1e300;
    if (rc == 0 && rep.contains("pairs") && rep.at("pairs").size() == 1)
      angle = rep.at("pairs")[0].at("max_rotation_angle_rad").get<double>();
    check(angle <= 1e-12, "compare of a resting body has zero discrepancy");
  }

  // compare: an attitude at eigenangle pi cannot be expressed in the quat
  // chart.
  {
    const json cfg{{"chart", "body"},
                   {"inertia", {{"principal", {1.0, 1.0, 2.0}}}},
                   {"initial", {{"attitude_quat", {0.0, 1.0, 0.0, 0.0}}}},
                   {"initial_rate", {{"omega", {0.1, 0.0, 0.0}}}},
                   {"dt", 0.001},
                   {"t_final", 0.5}};
    std::ofstream(path("pi.json")) << cfg.dump();
    check(run_command(rigidsim + " compare --config " + path("pi.json") +
                      " --charts quat > /dev/null 2>&1") == 5,
          "compare with eigenangle-pi attitude exits 5");
  }

  // malformed config exits 2.
  {
    std::ofstream(path("bad.json")) << "{\"chart\": \"euler321\"}";
    check(run_command(rigidsim + " simulate --config " + path("bad.json") + " --out " +
                      path("bad.csv") + " > /dev/null 2>&1") == 2,
          "invalid config exits 2");
  }

  std::error_code ec;
  fs::remove_all(tmp, ec);

  if (g_failures) std::printf("cli: %d check(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
