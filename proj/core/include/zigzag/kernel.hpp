#pragma once

#include "zigzag/gaussian_state.hpp"

#include <complex>
#include <span>
#include <variant>

namespace zigzag {

/// Closed-form transition kernel
///
///   K(q_out, q_in) = prefactor * exp[ i (alpha q_out^2 + beta q_in^2 + gamma q_out q_in) ]
///
/// in units hbar = m = 1. Free and oscillator kernels have real coefficients
/// with alpha = beta (endpoint symmetry) and gamma != 0; gamma -> 0 marks a
/// caustic and is rejected at construction.
///
/// `phase_branch` counts square-root branch crossings (Maslov index)
/// accumulated by construction and composition. The prefactor always stores
/// the full evaluated amplitude including the branch phase, so kernel
/// evaluation never consults the counter; it is bookkeeping for callers.
struct ComplexGaussianKernel {
  std::complex<double> prefactor;
  std::complex<double> alpha;
  std::complex<double> beta;
  std::complex<double> gamma;
  int phase_branch = 0;

  std::complex<double> value(double q_out, double q_in) const;
};

/// Degenerate composition result
///
///   coefficient * delta(q_out - slope*q_in) * exp(i curvature q_in^2),
///
/// produced when the shared-endpoint quadratic coefficient of a composition
/// vanishes. The forward/backward annihilation pair lands here with
/// coefficient 1, slope 1, curvature 0.
struct DeltaKernel {
  std::complex<double> coefficient;
  double slope = 1.0;
  std::complex<double> curvature{0.0, 0.0};
};

using Composition = std::variant<ComplexGaussianKernel, DeltaKernel>;

/// Probe-based classification of a two-kernel product against c*delta.
struct DeltaReport {
  std::complex<double> measured_coefficient;
  double displacement_error = 0.0;
  bool is_delta_like = false;
  double tolerance = 0.0;
};

inline constexpr double kDefaultCausticBand = 1e-6;
inline constexpr double kDeltaDegeneracyTol = 1e-10;

/// Free-particle kernel of the given positive duration:
/// alpha = beta = 1/(2T), gamma = -1/T, prefactor (2 pi i T)^{-1/2}.
ComplexGaussianKernel make_free_kernel(double duration);

/// Oscillator kernel: alpha = beta = w cos(wT)/(2 sin(wT)), gamma = -w/sin(wT),
/// prefactor [w/(2 pi i sin(wT))]^{1/2} continued across caustics via the
/// branch counter floor(wT/pi). Rejects |sin(wT)| < caustic_band.
ComplexGaussianKernel make_oscillator_kernel(double omega, double duration,
                                             double caustic_band = kDefaultCausticBand);

/// Time reversal for real potentials: evaluation is the complex conjugate of
/// the input's evaluation at every endpoint pair. Involutive.
ComplexGaussianKernel reverse_kernel(const ComplexGaussianKernel& k);

/// Exact composition over the shared endpoint,
/// integral dq_c later(q_out, q_c) earlier(q_c, q_in).
/// Returns the Gaussian result, or a DeltaKernel when later.beta + earlier.alpha
/// vanishes (the annihilation route).
Composition compose(const ComplexGaussianKernel& later, const ComplexGaussianKernel& earlier);

/// Delta-aware composition for chains that pass through the degenerate case.
Composition compose(const Composition& later, const Composition& earlier);

/// Gaussian-only composition; throws DegeneracyError on the delta-degenerate
/// case instead of returning it.
ComplexGaussianKernel compose_gaussian(const ComplexGaussianKernel& later,
                                       const ComplexGaussianKernel& earlier);

/// Exact propagation of a Gaussian packet, integral dq K(q_out, q) psi(q).
GaussianState apply_to_state(const ComplexGaussianKernel& k, const GaussianState& psi);

/// Applies `earlier` then `later` to each probe, fits the scalar c in
/// (later o earlier) psi ~ c psi, and reports the worst relative L2
/// displacement. is_delta_like iff every probe stays within tol.
DeltaReport classify_delta(const ComplexGaussianKernel& later,
                           const ComplexGaussianKernel& earlier,
                           std::span<const GaussianState> probes, double tol);

} // namespace zigzag
