// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include "zigzag/engine.hpp"
#include "zigzag/field_modes.hpp"
#include "zigzag/kernel.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <numbers>

using namespace zigzag;

namespace {

int failures = 0;

void report(int number, bool pass, const char* name, const std::string& detail) {
  std::printf("%s  %2d  %s  (%s)\n", pass ? "PASS" : "FAIL", number, name, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ZigzagScenario reference_scenario(double t_c) {
  ZigzagScenario s;
  s.tau_map = build_tau_map(0.0, 1.0, t_c, 3.0);
  s.potential = Potential::harmonic(1.0);
  s.grid = build_grid(256, -10.0, 10.0);
  s.slices_per_unit_time = 1000;
  return s;
}

void criterion_1_analytic_annihilation() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto probes = random_probe_states(1, 5);
  double worst_coeff = 0.0, worst_disp = 0.0;
  bool all_delta = true;
  for (double T : {0.3, 1.0, 2.7}) {
    const ComplexGaussianKernel k = make_oscillator_kernel(1.0, T);
    const DeltaReport r = classify_delta(reverse_kernel(k), k, probes, 1e-8);
    worst_coeff = std::max(worst_coeff, std::abs(std::abs(r.measured_coefficient) - 1.0));
    worst_disp = std::max(worst_disp, r.displacement_error);
    all_delta = all_delta && r.is_delta_like;
  }
  const double elapsed = seconds_since(t0);
  const bool pass = all_delta && worst_coeff <= 1e-8 && worst_disp <= 1e-10 && elapsed < 1.0;
  report(1, pass, "analytic annihilation: reverse(K) o K is the unit delta",
         fmt("max | |c|-1 | = %.2e <= 1e-8, max displacement = %.2e <= 1e-10, %.2fs < 1s",
             worst_coeff, worst_disp, elapsed));
}

void criterion_2_grid_annihilation() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid g = build_grid(256, -10.0, 10.0);
  const Potential v = Potential::harmonic(1.0);
  const KernelMatrix fwd = propagate_segment(g, v, 1.0, 1000, Direction::forward);
  const KernelMatrix bwd = propagate_segment(g, v, 1.0, 1000, Direction::backward);
  const double dev = identity_deviation(compose_matrices(bwd, fwd));
  const double elapsed = seconds_since(t0);
  const bool pass = dev <= 1e-2 && elapsed < 60.0;
  report(2, pass, "grid annihilation at eps = 1e-3, duration 1 each way",
         fmt("identity deviation = %.2e <= 1e-2, %.2fs < 60s", dev, elapsed));
}

void criterion_3_zigzag_equals_direct() {
  const EquivalenceReport analytic = compare(reference_scenario(2.0));
  CompareOptions grid_options;
  grid_options.path = ComparisonPath::grid;
  const EquivalenceReport grid = compare(reference_scenario(2.0), grid_options);
  const bool pass =
      analytic.relative_difference <= 1e-10 && grid.relative_difference <= 2e-2;
  report(3, pass, "zigzag amplitude equals the direct amplitude",
         fmt("analytic rel diff = %.2e <= 1e-10, grid rel diff = %.2e <= 2e-2",
             analytic.relative_difference, grid.relative_difference));
}

void criterion_4_duration_independence() {
  const EquivalenceReport a1 = compare(reference_scenario(1.5));
  const EquivalenceReport a2 = compare(reference_scenario(2.5));
  const double analytic_diff =
      interior_relative_difference(a1.zigzag_amplitude, a2.zigzag_amplitude);

  CompareOptions grid_options;
  grid_options.path = ComparisonPath::grid;
  const EquivalenceReport g1 = compare(reference_scenario(1.5), grid_options);
  const EquivalenceReport g2 = compare(reference_scenario(2.5), grid_options);
  const double grid_diff =
      interior_relative_difference(g1.zigzag_amplitude, g2.zigzag_amplitude);

  const bool pass = analytic_diff <= 1e-10 && grid_diff <= 2e-2;
  report(4, pass, "turning-time independence (t_c = 1.5 vs 2.5)",
         fmt("analytic diff = %.2e <= 1e-10, grid diff = %.2e <= 2e-2", analytic_diff,
             grid_diff));
}

void criterion_5_oscillator_fidelity() {
  const Grid g = build_grid(256, -10.0, 10.0);
  const KernelMatrix seg =
      propagate_segment(g, Potential::harmonic(1.0), 1.0, 1000, Direction::forward);
  const GaussianState psi = GaussianState::normalized(0.0, 1.0, 0.0);
  const Eigen::VectorXcd grid_out = apply_to_vector(seg, sample_state(g, psi));
  const Eigen::VectorXcd exact_out =
      sample_state(g, apply_to_state(make_oscillator_kernel(1.0, 1.0), psi));
  const double rel = interior_relative_l2(g, grid_out, exact_out);
  report(5, rel <= 1e-2, "grid oscillator propagation matches the closed form",
         fmt("relative L2 on a packet = %.2e <= 1e-2", rel));
}

void criterion_6_free_limit() {
  const ComplexGaussianKernel osc = make_oscillator_kernel(1e-4, 1.0);
  const ComplexGaussianKernel fre = make_free_kernel(1.0);
  double worst = 0.0;
  for (int a = -12; a <= 12; ++a) {
    for (int b = -12; b <= 12; ++b) {
      const double qo = a / 4.0, qi = b / 4.0;
      worst = std::max(worst, std::abs(osc.value(qo, qi) - fre.value(qo, qi)) /
                                  std::abs(fre.value(qo, qi)));
    }
  }
  report(6, worst <= 1e-6, "small-frequency oscillator reduces to the free kernel",
         fmt("max pointwise rel diff on |q| <= 3 is %.2e <= 1e-6", worst));
}

void criterion_7_coincidence_normalization() {
  const GaussianState psi = GaussianState::normalized(0.0, 1.0, 0.0);
  const GaussianState out = apply_to_state(make_free_kernel(1e-6), psi);
  const double rel = relative_residual(psi, out, {1.0, 0.0});
  report(7, rel <= 1e-3, "short-duration propagation approaches the identity",
         fmt("relative L2 at T = 1e-6 is %.2e <= 1e-3", rel));
}

void criterion_8_field_factorization() {
  const auto t0 = std::chrono::steady_clock::now();
  const ModeSet modes = build_mode_set(1.0, 3.0, 10);
  const TauMap schedule = build_tau_map(0.0, 1.0, 2.0, 3.0);
  const FieldAmplitudeReport r = field_transition_report(modes, schedule);
  double worst = 0.0;
  for (const auto& m : r.per_mode) worst = std::max(worst, m.relative_error);
  const double elapsed = seconds_since(t0);
  const bool pass = r.per_mode.size() == 10 && worst <= 1e-9 &&
                    r.product_consistency_error <= 1e-9 && elapsed < 1.0;
  report(8, pass, "field modes factorize",
         fmt("max per-mode error = %.2e <= 1e-9, product error = %.2e <= 1e-9, %.2fs < 1s",
             worst, r.product_consistency_error, elapsed));
}

void criterion_9_prefactor_phase() {
  const EquivalenceReport r = compare(reference_scenario(2.0));
  const std::complex<double> c = r.measured_delta_coefficient;
  const double phase = std::abs(std::arg(c));
  const double vs_i = std::abs(c - std::complex<double>{0.0, 1.0});
  report(9, phase <= 1e-6, "measured delta coefficient has the unitary phase",
         fmt("|arg c| = %.2e <= 1e-6; deviation from a factor i would be |c - i| = %.3f",
             phase, vs_i));
}

void criterion_10_negative_control() {
  CompareOptions analytic;
  analytic.middle = MiddleSegments::forward_forward;
  const EquivalenceReport a = compare(reference_scenario(2.0), analytic);

  CompareOptions grid = analytic;
  grid.path = ComparisonPath::grid;
  const EquivalenceReport g = compare(reference_scenario(2.0), grid);

  const bool pass = a.relative_difference >= 0.1 && g.relative_difference >= 0.1;
  report(10, pass, "negative control: unconjugated middle segments break equivalence",
         fmt("analytic rel diff = %.2f >= 0.1, grid rel diff = %.2f >= 0.1",
             a.relative_difference, g.relative_difference));
}

} // namespace

int main() {
  std::printf("acceptance suite (harmonic reference: n = 256, extent [-10, 10], "
              "1000 slices per unit time)\n");
  criterion_1_analytic_annihilation();
  criterion_2_grid_annihilation();
  criterion_3_zigzag_equals_direct();
  criterion_4_duration_independence();
  criterion_5_oscillator_fidelity();
  criterion_6_free_limit();
  criterion_7_coincidence_normalization();
  criterion_8_field_factorization();
  criterion_9_prefactor_phase();
  criterion_10_negative_control();
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
