// End-to-end checks of the scenario runner: exit codes, report/CSV artifacts,
// flag overrides, determinism. Spawns the installed binary via the shell.

#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

#ifndef ZIGZAG_CLI
#error "ZIGZAG_CLI must point at the scenario runner binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string stderr_text;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "zigzag-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args, const std::string& tag) {
  const fs::path err_file = scratch_dir() / (tag + ".stderr");
  const std::string cmd =
      std::string(ZIGZAG_CLI) + " " + args + " 2>" + err_file.string();
  const int raw = std::system(cmd.c_str());
  std::ifstream err(err_file);
  std::stringstream buf;
  buf << err.rdbuf();
  return RunResult{WEXITSTATUS(raw), buf.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

TEST_CASE("analytic scenario passes and writes the report artifacts") {
  const fs::path out = scratch_dir() / "analytic";
  const RunResult r = run_cli("--mode analytic --omega 1.0 --out " + out.string(), "analytic");
  CHECK(r.exit_code == 0);

  const json report = json::parse(slurp(out / "report.json"));
  CHECK(report["results"]["pass"] == true);
  CHECK(report["results"]["relative_difference"].get<double>() <= 1e-10);
  CHECK(report["results"]["annihilation_deviation"].get<double>() <= 1e-8);
  CHECK(report["config"]["mode"] == "analytic");
  CHECK(report.contains("timestamp"));
  CHECK(report.contains("version"));

  const std::string csv = slurp(out / "kernels.csv");
  CHECK(csv.rfind("q_out,q_in,re_zigzag,im_zigzag,re_direct,im_direct\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') > 16);
}

TEST_CASE("flag overrides win over the config file") {
  const fs::path cfg = scratch_dir() / "override.json";
  {
    std::ofstream f(cfg);
    f << R"({"mode": "analytic", "times": {"t_c": 2.0}, "seed": 7})";
  }
  const fs::path out = scratch_dir() / "override-out";
  const RunResult r =
      run_cli(cfg.string() + " --t-c 2.5 --out " + out.string(), "override");
  CHECK(r.exit_code == 0);
  const json report = json::parse(slurp(out / "report.json"));
  CHECK(report["config"]["times"]["t_c"].get<double>() == 2.5);
  CHECK(report["config"]["seed"].get<int>() == 7);
}

TEST_CASE("invalid time ordering exits 2") {
  const RunResult r = run_cli("--mode analytic --t-d 2.0 --t-c 1.5 --out " +
                                  (scratch_dir() / "bad-order").string(),
                              "bad-order");
  CHECK(r.exit_code == 2);
  CHECK(r.stderr_text.find("config error") != std::string::npos);
}

TEST_CASE("nyquist violation exits 3 and names the ratio") {
  // n = 64 over [-10, 10]: spacing^2/(2 eps) = 50.4 at eps = 1e-3
  const RunResult r = run_cli(
      "--mode grid --grid-n 64 --grid-extent 10 --slices 1000 --out " +
          (scratch_dir() / "nyquist").string(),
      "nyquist");
  CHECK(r.exit_code == 3);
  CHECK(r.stderr_text.find("numerical error") != std::string::npos);
  CHECK(r.stderr_text.find("50.39") != std::string::npos);
}

TEST_CASE("caustic frequency exits 3") {
  // omega = pi puts the unit-duration middle segments on a caustic
  const RunResult r = run_cli("--mode analytic --omega 3.141592653589793 --out " +
                                  (scratch_dir() / "caustic").string(),
                              "caustic");
  CHECK(r.exit_code == 3);
  CHECK(r.stderr_text.find("caustic") != std::string::npos);
}

TEST_CASE("tolerance failure exits 1") {
  const fs::path cfg = scratch_dir() / "strict.json";
  {
    std::ofstream f(cfg);
    f << R"({"mode": "analytic", "tolerances": {"annihilation": 1e-30}})";
  }
  const fs::path out = scratch_dir() / "strict-out";
  const RunResult r = run_cli(cfg.string() + " --out " + out.string(), "strict");
  CHECK(r.exit_code == 1);
  const json report = json::parse(slurp(out / "report.json"));
  CHECK(report["results"]["pass"] == false);
}

TEST_CASE("field mode passes") {
  const fs::path out = scratch_dir() / "field";
  const RunResult r = run_cli("--mode field --out " + out.string(), "field");
  CHECK(r.exit_code == 0);
  const json report = json::parse(slurp(out / "report.json"));
  CHECK(report["results"]["per_mode"].size() == 10);
  CHECK(report["results"]["product_consistency_error"].get<double>() <= 1e-9);
}

TEST_CASE("grid mode at a modest discretization passes") {
  const fs::path out = scratch_dir() / "grid";
  const RunResult r = run_cli(
      "--mode grid --grid-n 128 --grid-extent 10 --slices 100 --out " + out.string(),
      "grid");
  CHECK(r.exit_code == 0);
  const json report = json::parse(slurp(out / "report.json"));
  CHECK(report["results"]["relative_difference"].get<double>() <= 2e-2);
}

TEST_CASE("identical config and seed reproduce the outputs byte for byte") {
  const fs::path out = scratch_dir() / "det";
  CHECK(run_cli("--mode analytic --seed 5 --out " + out.string(), "det1").exit_code == 0);
  const std::string csv1 = slurp(out / "kernels.csv");
  const std::string rep1 = slurp(out / "report.json");

  CHECK(run_cli("--mode analytic --seed 5 --out " + out.string(), "det2").exit_code == 0);
  CHECK(slurp(out / "kernels.csv") == csv1);

  json r1 = json::parse(rep1);
  json r2 = json::parse(slurp(out / "report.json"));
  r1.erase("timestamp");
  r2.erase("timestamp");
  CHECK(r1.dump() == r2.dump());
}
