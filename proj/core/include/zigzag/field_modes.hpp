#pragma once

#include "zigzag/tau_map.hpp"

#include <complex>
#include <string>
#include <vector>

namespace zigzag {

/// Truncated set of scalar-field modes, each an independent oscillator with
/// dispersion w_p = sqrt(p^2 + mass^2).
struct ModeSet {
  double mass = 0.0;
  std::vector<double> momenta;     // ascending, all > 0
  std::vector<double> frequencies; // ascending, derived from the dispersion
};

/// Evenly spaced momenta p_i = i * p_max / n_modes, i = 1..n_modes (the zero
/// mode is excluded by construction).
ModeSet build_mode_set(double mass, double p_max, int n_modes);

struct ModeCheckResult {
  double frequency = 0.0;
  double relative_error = 0.0;
  std::complex<double> delta_coefficient{0.0, 0.0};
};

struct SkippedMode {
  double frequency = 0.0;
  std::string reason;
};

/// Analytic zigzag-vs-direct comparison for one oscillator mode.
/// Throws CausticError when a segment or total duration of the schedule
/// lands in the caustic band of this frequency.
ModeCheckResult mode_zigzag_check(double mode_frequency, const TauMap& schedule);

struct FieldAmplitudeReport {
  std::vector<ModeCheckResult> per_mode;
  std::vector<SkippedMode> skipped;
  double product_consistency_error = 0.0;
  bool all_skipped = false;
};

/// Per-mode checks plus the consistency of the factorized transition factors
///
///   | prod_p f_z(p) - prod_p f_d(p) | / | prod_p f_d(p) |
///
/// where f(p) = <psi_p, K psi_p> on a reference product-Gaussian configuration
/// (per-mode vacuum-width packets). Caustic modes are skipped and listed.
FieldAmplitudeReport field_transition_report(const ModeSet& modes, const TauMap& schedule);

} // namespace zigzag
