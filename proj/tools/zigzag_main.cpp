// Scenario runner: reads a JSON config (plus flag overrides), runs the
// analytic or grid zigzag comparison or the field-mode sweep, and writes
// report.json and kernels.csv into the output directory.
//
// Exit codes: 0 all checks pass, 1 tolerance failure, 2 config error,
// 3 numerical error (caustic, Nyquist, degeneracy).

#include "zigzag/engine.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/field_modes.hpp"
#include "zigzag/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct ScenarioConfig {
  std::string mode = "analytic"; // analytic | grid | field
  std::string potential_kind = "harmonic";
  double omega = 1.0;
  double t_a = 0.0, t_d = 1.0, t_c = 2.0, t_f = 3.0;
  int grid_n = 256;
  double grid_extent = 10.0;
  int slices_per_unit_time = 1000;
  double mass = 1.0;
  double p_max = 3.0;
  int n_modes = 10;
  // Tolerances; negative = use the mode default.
  double tol_relative = -1.0;
  double tol_annihilation = -1.0;
  double tol_per_mode = -1.0;
  double tol_product = -1.0;
  std::string out = "zigzag-out";
  std::uint64_t seed = 1;

  void resolve_defaults() {
    if (tol_relative < 0) tol_relative = mode == "grid" ? 2e-2 : 1e-10;
    if (tol_annihilation < 0) tol_annihilation = mode == "grid" ? 1e-2 : 1e-8;
    if (tol_per_mode < 0) tol_per_mode = 1e-9;
    if (tol_product < 0) tol_product = 1e-9;
  }
};

void load_config_file(const std::string& path, ScenarioConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw zigzag::DomainError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw zigzag::DomainError(std::string("config parse error: ") + e.what());
  }
  cfg.mode = j.value("mode", cfg.mode);
  if (j.contains("potential")) {
    const auto& p = j["potential"];
    cfg.potential_kind = p.value("kind", cfg.potential_kind);
    cfg.omega = p.value("omega", cfg.omega);
  }
  if (j.contains("times")) {
    const auto& t = j["times"];
    cfg.t_a = t.value("t_a", cfg.t_a);
    cfg.t_d = t.value("t_d", cfg.t_d);
    cfg.t_c = t.value("t_c", cfg.t_c);
    cfg.t_f = t.value("t_f", cfg.t_f);
  }
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    cfg.grid_n = g.value("n", cfg.grid_n);
    cfg.grid_extent = g.value("extent", cfg.grid_extent);
  }
  cfg.slices_per_unit_time = j.value("slices_per_unit_time", cfg.slices_per_unit_time);
  if (j.contains("field")) {
    const auto& f = j["field"];
    cfg.mass = f.value("mass", cfg.mass);
    cfg.p_max = f.value("p_max", cfg.p_max);
    cfg.n_modes = f.value("n_modes", cfg.n_modes);
  }
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    cfg.tol_relative = t.value("relative_difference", cfg.tol_relative);
    cfg.tol_annihilation = t.value("annihilation", cfg.tol_annihilation);
    cfg.tol_per_mode = t.value("per_mode", cfg.tol_per_mode);
    cfg.tol_product = t.value("product", cfg.tol_product);
  }
  cfg.out = j.value("out", cfg.out);
  cfg.seed = j.value("seed", cfg.seed);
}

json config_echo(const ScenarioConfig& c) {
  return json{
      {"mode", c.mode},
      {"potential", {{"kind", c.potential_kind}, {"omega", c.omega}}},
      {"times", {{"t_a", c.t_a}, {"t_d", c.t_d}, {"t_c", c.t_c}, {"t_f", c.t_f}}},
      {"grid", {{"n", c.grid_n}, {"extent", c.grid_extent}}},
      {"slices_per_unit_time", c.slices_per_unit_time},
      {"field", {{"mass", c.mass}, {"p_max", c.p_max}, {"n_modes", c.n_modes}}},
      {"tolerances",
       {{"relative_difference", c.tol_relative},
        {"annihilation", c.tol_annihilation},
        {"per_mode", c.tol_per_mode},
        {"product", c.tol_product}}},
      {"out", c.out},
      {"seed", c.seed},
  };
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void write_atomic(const fs::path& target, const std::string& contents) {
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
    if (!out) throw zigzag::Error("failed to write " + tmp.string());
  }
  fs::rename(tmp, target);
}

json complex_json(std::complex<double> z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

std::string kernels_csv(const zigzag::KernelMatrix& zig, const zigzag::KernelMatrix& dir) {
  const int n = zig.grid.n;
  const int stride = std::max(1, n / 32);
  std::string csv = "q_out,q_in,re_zigzag,im_zigzag,re_direct,im_direct\n";
  char line[256];
  for (int j = 0; j < n; j += stride) {
    for (int k = 0; k < n; k += stride) {
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    zig.grid.point(j), zig.grid.point(k), zig.entries(j, k).real(),
                    zig.entries(j, k).imag(), dir.entries(j, k).real(),
                    dir.entries(j, k).imag());
      csv += line;
    }
  }
  return csv;
}

zigzag::Potential make_potential(const ScenarioConfig& c) {
  if (c.potential_kind == "free") return zigzag::Potential::free();
  if (c.potential_kind == "harmonic") return zigzag::Potential::harmonic(c.omega);
  throw zigzag::DomainError("unknown potential kind: " + c.potential_kind);
}

int run_scenario(const ScenarioConfig& cfg) {
  const zigzag::TauMap schedule = zigzag::build_tau_map(cfg.t_a, cfg.t_d, cfg.t_c, cfg.t_f);

  json report;
  report["schema"] = 1;
  report["version"] = zigzag::kVersion;
  report["timestamp"] = timestamp_utc();
  report["config"] = config_echo(cfg);

  bool pass = true;
  std::string csv;

  if (cfg.mode == "analytic" || cfg.mode == "grid") {
    zigzag::ZigzagScenario scenario;
    scenario.tau_map = schedule;
    scenario.potential = make_potential(cfg);
    scenario.grid = zigzag::build_grid(cfg.grid_n, -cfg.grid_extent, cfg.grid_extent);
    scenario.slices_per_unit_time = cfg.slices_per_unit_time;

    zigzag::CompareOptions options;
    options.path = cfg.mode == "grid" ? zigzag::ComparisonPath::grid
                                      : zigzag::ComparisonPath::analytic;
    options.probe_seed = cfg.seed;

    const zigzag::EquivalenceReport r = zigzag::compare(scenario, options);
    pass = r.relative_difference <= cfg.tol_relative &&
           r.annihilation_deviation <= cfg.tol_annihilation;
    report["results"] = json{
        {"relative_difference", r.relative_difference},
        {"annihilation_deviation", r.annihilation_deviation},
        {"measured_delta_coefficient", complex_json(r.measured_delta_coefficient)},
        {"delta_like", r.delta_like},
        {"pass", pass},
    };
    csv = kernels_csv(r.zigzag_amplitude, r.direct_amplitude);
  } else if (cfg.mode == "field") {
    const zigzag::ModeSet modes = zigzag::build_mode_set(cfg.mass, cfg.p_max, cfg.n_modes);
    const zigzag::FieldAmplitudeReport r = zigzag::field_transition_report(modes, schedule);
    if (r.all_skipped) {
      throw zigzag::CausticError("field: every mode fell in a caustic band of the schedule");
    }
    json per_mode = json::array();
    for (const auto& m : r.per_mode) {
      pass = pass && m.relative_error <= cfg.tol_per_mode;
      per_mode.push_back(json{{"omega", m.frequency},
                              {"relative_error", m.relative_error},
                              {"delta_coefficient", complex_json(m.delta_coefficient)}});
    }
    json skipped = json::array();
    for (const auto& s : r.skipped) {
      skipped.push_back(json{{"omega", s.frequency}, {"reason", s.reason}});
    }
    pass = pass && r.product_consistency_error <= cfg.tol_product;
    report["results"] = json{
        {"per_mode", per_mode},
        {"skipped", skipped},
        {"product_consistency_error", r.product_consistency_error},
        {"pass", pass},
    };
    // Kernel dump for the lowest-frequency mode.
    const zigzag::Potential v = zigzag::Potential::harmonic(r.per_mode.empty()
                                                                ? modes.frequencies.front()
                                                                : r.per_mode.front().frequency);
    const zigzag::Grid g = zigzag::build_grid(cfg.grid_n, -cfg.grid_extent, cfg.grid_extent);
    csv = kernels_csv(zigzag::sample_kernel(g, zigzag::zigzag_kernel(v, schedule)),
                      zigzag::sample_kernel(g, zigzag::direct_kernel(v, schedule)));
  } else {
    throw zigzag::DomainError("unknown mode: " + cfg.mode);
  }

  fs::create_directories(cfg.out);
  write_atomic(fs::path(cfg.out) / "report.json", report.dump(2) + "\n");
  write_atomic(fs::path(cfg.out) / "kernels.csv", csv);

  return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  ScenarioConfig cfg;
  std::string config_path;

  CLI::App app{"time-zigzag transition amplitude checks"};
  app.add_option("config", config_path, "JSON scenario config")->check(CLI::ExistingFile);
  app.add_option("--mode", cfg.mode, "analytic | grid | field");
  app.add_option("--omega", cfg.omega, "harmonic frequency");
  app.add_option("--grid-n", cfg.grid_n, "grid point count");
  app.add_option("--grid-extent", cfg.grid_extent, "half-extent; grid covers [-x, x]");
  app.add_option("--slices", cfg.slices_per_unit_time, "slices per unit time");
  app.add_option("--t-a", cfg.t_a, "start time");
  app.add_option("--t-d", cfg.t_d, "lower turning time");
  app.add_option("--t-c", cfg.t_c, "upper turning time");
  app.add_option("--t-f", cfg.t_f, "final time");
  app.add_option("--out", cfg.out, "output directory");
  app.add_option("--seed", cfg.seed, "probe-state seed");

  // Parse twice so flags override config-file values.
  try {
    app.parse(argc, argv);
    if (!config_path.empty()) {
      load_config_file(config_path, cfg);
      app.clear();
      app.parse(argc, argv);
    }
    cfg.resolve_defaults();
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const zigzag::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  try {
    return run_scenario(cfg);
  } catch (const zigzag::CausticError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const zigzag::DiscretizationError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const zigzag::DegeneracyError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const zigzag::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
