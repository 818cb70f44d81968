#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace zigzag {

/// A complex Gaussian wave packet
///
///   psi(q) = normalization * exp[ -shape*(q - center)^2 + i*momentum*(q - center) ]
///
/// with Re(shape) > 0. The real part of `shape` sets the packet width,
/// width = 1/(2*sqrt(Re shape)); the imaginary part is a quadratic chirp.
/// Kernels map Gaussians to Gaussians only if the chirp degree of freedom is
/// kept, so propagation stays closed-form exact.
struct GaussianState {
  double center = 0.0;
  std::complex<double> shape{0.25, 0.0};
  double momentum = 0.0;
  std::complex<double> normalization{1.0, 0.0};

  /// Unit-L2-norm packet of the given real width (no chirp).
  static GaussianState normalized(double center, double width, double momentum);

  double width() const;
  std::complex<double> value(double q) const;
  double norm_squared() const;
  double norm() const;
};

/// <a|b> = integral conj(a(q)) b(q) dq, closed form.
std::complex<double> inner_product(const GaussianState& a, const GaussianState& b);

/// ||a - b|| in L2, closed form.
double l2_distance(const GaussianState& a, const GaussianState& b);

/// || phi - c*psi || / ||psi||, stable down to machine-level residuals.
///
/// The moment identity ||phi||^2 + |c|^2 ||psi||^2 - 2 Re(conj(c) <psi,phi>)
/// cancels catastrophically when phi ~ c*psi (noise floor ~1e-8 after the
/// square root). For nearly identical packets this instead factors
/// phi - c psi = c psi (e^Delta - 1) with Delta a quadratic polynomial of
/// well-conditioned parameter differences, and integrates |c psi|^2 |Delta|^2
/// in closed form.
double relative_residual(const GaussianState& psi, const GaussianState& phi,
                         std::complex<double> c);

/// Deterministic probe packets: centers in [-2,2], widths in [0.5,2],
/// momenta in [-2,2], unit norm. Independent of platform RNG distributions.
std::vector<GaussianState> random_probe_states(std::uint64_t seed, int count);

namespace detail {

/// integral exp(P q^2 + Q q) dq over the real line, principal branch.
/// Requires Re(P) <= 0 (oscillatory case included) and P != 0.
std::complex<double> gaussian_integral(std::complex<double> P, std::complex<double> Q);

} // namespace detail

} // namespace zigzag
