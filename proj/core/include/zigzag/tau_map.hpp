#pragma once

namespace zigzag {

/// Piecewise-linear reparametrization t(tau) for a single time zigzag.
///
/// Physical times t_a < t_d < t_c < t_f: the trajectory runs forward to t_c,
/// backward down to t_d, then forward again to t_f. In the parameter tau the
/// three pieces have slopes +1, -1, +1:
///
///   t = tau                          for tau <= tau_c,
///   t = 2 tau_c - tau                for tau_c < tau < tau_d,
///   t = tau + 2 (tau_c - tau_d)      for tau >= tau_d,
///
/// with tau_a = t_a, tau_b = t_d, tau_c = t_c, tau_d = 2 t_c - t_d and
/// tau_f = t_f + 2 (t_c - t_d). tau_b is the forward-branch parameter with
/// t(tau_b) = t(tau_d) = t_d, so the two middle segments have equal length
/// tau_c - tau_b = tau_d - tau_c = t_c - t_d.
struct TauMap {
  double t_a, t_d, t_c, t_f;
  double tau_a, tau_b, tau_c, tau_d, tau_f;

  double t_of_tau(double tau) const;

  double segment_initial() const { return tau_b - tau_a; }
  double segment_outbound() const { return tau_c - tau_b; }
  // Algebraically tau_d - tau_c; written as the same expression as the
  // outbound segment so the two middle durations are equal to the last bit
  // and slice counts derived from them always pair one-to-one.
  double segment_return() const { return t_c - t_d; }
  double segment_final() const { return tau_f - tau_d; }
  double direct_duration() const { return t_f - t_a; }
};

/// Validates t_a < t_d < t_c < t_f and derives the tau values.
TauMap build_tau_map(double t_a, double t_d, double t_c, double t_f);

} // namespace zigzag
