#include "zigzag/kernel.hpp"

#include "zigzag/errors.hpp"

#include <cmath>
#include <numbers>

namespace zigzag {

using std::numbers::pi;
namespace {
constexpr std::complex<double> kI{0.0, 1.0};
} // namespace

std::complex<double> ComplexGaussianKernel::value(double q_out, double q_in) const {
  return prefactor *
         std::exp(kI * (alpha * q_out * q_out + beta * q_in * q_in + gamma * q_out * q_in));
}

ComplexGaussianKernel make_free_kernel(double duration) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw DomainError("make_free_kernel: duration must be a positive finite real");
  }
  ComplexGaussianKernel k;
  k.alpha = k.beta = 0.5 / duration;
  k.gamma = -1.0 / duration;
  // (2 pi i T)^{-1/2} on the principal branch
  k.prefactor = std::exp(std::complex<double>{0.0, -pi / 4.0}) / std::sqrt(2.0 * pi * duration);
  k.phase_branch = 0;
  return k;
}

ComplexGaussianKernel make_oscillator_kernel(double omega, double duration,
                                             double caustic_band) {
  if (!(omega > 0.0) || !(duration > 0.0) || !std::isfinite(omega) ||
      !std::isfinite(duration)) {
    throw DomainError("make_oscillator_kernel: omega and duration must be positive finite reals");
  }
  const double wt = omega * duration;
  const double s = std::sin(wt);
  const double c = std::cos(wt);
  if (std::abs(s) < caustic_band) {
    throw CausticError("make_oscillator_kernel: omega*T within the caustic exclusion band of n*pi");
  }
  ComplexGaussianKernel k;
  k.alpha = k.beta = omega * c / (2.0 * s);
  k.gamma = -omega / s;
  // [w/(2 pi i sin wT)]^{1/2}, continued past each caustic by exp(-i pi/2).
  const int branch = static_cast<int>(std::floor(wt / pi));
  k.prefactor = std::sqrt(omega / (2.0 * pi * std::abs(s))) *
                std::exp(kI * (-pi / 4.0 - pi / 2.0 * branch));
  k.phase_branch = branch;
  return k;
}

ComplexGaussianKernel reverse_kernel(const ComplexGaussianKernel& k) {
  // conj(A exp(i Q)) = conj(A) exp(i (-conj(Q)))
  ComplexGaussianKernel r;
  r.prefactor = std::conj(k.prefactor);
  r.alpha = -std::conj(k.alpha);
  r.beta = -std::conj(k.beta);
  r.gamma = -std::conj(k.gamma);
  r.phase_branch = -k.phase_branch;
  return r;
}

Composition compose(const ComplexGaussianKernel& later, const ComplexGaussianKernel& earlier) {
  const std::complex<double> mid = later.beta + earlier.alpha;
  const double scale =
      std::max({1.0, std::abs(later.beta), std::abs(earlier.alpha)});

  if (std::abs(mid) <= kDeltaDegeneracyTol * scale) {
    // integral dq_c exp[i (g2 q_out + g1 q_in) q_c] = 2 pi delta(g2 q_out + g1 q_in)
    if (later.gamma.imag() != 0.0 || earlier.gamma.imag() != 0.0) {
      throw DegeneracyError("compose: delta route requires real cross coefficients");
    }
    const double g2 = later.gamma.real();
    const double g1 = earlier.gamma.real();
    DeltaKernel d;
    d.slope = -g1 / g2;
    d.coefficient = later.prefactor * earlier.prefactor * 2.0 * pi / std::abs(g2);
    d.curvature = later.alpha * d.slope * d.slope + earlier.beta;
    return d;
  }

  // integral dq_c exp[i(mid q_c^2 + (g2 q_out + g1 q_in) q_c)], principal branch
  ComplexGaussianKernel k;
  k.prefactor = later.prefactor * earlier.prefactor *
                std::sqrt(pi / (-kI * mid));
  k.alpha = later.alpha - later.gamma * later.gamma / (4.0 * mid);
  k.beta = earlier.beta - earlier.gamma * earlier.gamma / (4.0 * mid);
  k.gamma = -later.gamma * earlier.gamma / (2.0 * mid);
  k.phase_branch = later.phase_branch + earlier.phase_branch + (mid.real() < 0.0 ? 1 : 0);
  return k;
}

namespace {

ComplexGaussianKernel compose_gauss_delta(const ComplexGaussianKernel& g, const DeltaKernel& d) {
  // integral dq_c g(q_out, q_c) c delta(q_c - s q_in) e^{i k q_in^2}
  ComplexGaussianKernel k = g;
  k.prefactor = d.coefficient * g.prefactor;
  k.beta = g.beta * d.slope * d.slope + d.curvature;
  k.gamma = g.gamma * d.slope;
  return k;
}

ComplexGaussianKernel compose_delta_gauss(const DeltaKernel& d, const ComplexGaussianKernel& g) {
  // delta(q_out - s q_c) pins q_c = q_out/s with weight 1/|s|
  ComplexGaussianKernel k = g;
  const double s = d.slope;
  k.prefactor = d.coefficient / std::abs(s) * g.prefactor;
  k.alpha = (g.alpha + d.curvature) / (s * s);
  k.gamma = g.gamma / s;
  return k;
}

DeltaKernel compose_delta_delta(const DeltaKernel& later, const DeltaKernel& earlier) {
  DeltaKernel d;
  d.coefficient = later.coefficient * earlier.coefficient;
  d.slope = later.slope * earlier.slope;
  d.curvature = earlier.curvature + later.curvature * earlier.slope * earlier.slope;
  return d;
}

} // namespace

Composition compose(const Composition& later, const Composition& earlier) {
  return std::visit(
      [](const auto& l, const auto& e) -> Composition {
        using L = std::decay_t<decltype(l)>;
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<L, ComplexGaussianKernel> &&
                      std::is_same_v<E, ComplexGaussianKernel>) {
          return compose(l, e);
        } else if constexpr (std::is_same_v<L, ComplexGaussianKernel>) {
          return compose_gauss_delta(l, e);
        } else if constexpr (std::is_same_v<E, ComplexGaussianKernel>) {
          return compose_delta_gauss(l, e);
        } else {
          return compose_delta_delta(l, e);
        }
      },
      later, earlier);
}

ComplexGaussianKernel compose_gaussian(const ComplexGaussianKernel& later,
                                       const ComplexGaussianKernel& earlier) {
  Composition c = compose(later, earlier);
  if (std::holds_alternative<DeltaKernel>(c)) {
    throw DegeneracyError(
        "compose_gaussian: delta-degenerate midpoint coefficient; "
        "the result is a delta kernel, use compose()/classify_delta");
  }
  return std::get<ComplexGaussianKernel>(c);
}

GaussianState apply_to_state(const ComplexGaussianKernel& k, const GaussianState& psi) {
  if (!(psi.shape.real() > 0.0)) {
    throw DomainError("apply_to_state: state must have positive width");
  }
  // integrand over q: exp(P q^2 + Q q + R), with q_out kept symbolic
  const std::complex<double> a = psi.shape;
  const std::complex<double> P = kI * k.beta - a;
  if (!(P.real() < 0.0)) {
    throw DegeneracyError("apply_to_state: divergent propagation integral");
  }
  const std::complex<double> w0 = 2.0 * a * psi.center + kI * psi.momentum;

  // result exponent as a polynomial S2 q_out^2 + S1 q_out + S0
  const std::complex<double> S2 = kI * k.alpha + k.gamma * k.gamma / (4.0 * P);
  const std::complex<double> S1 = -kI * k.gamma * w0 / (2.0 * P);
  const std::complex<double> S0 =
      -w0 * w0 / (4.0 * P) - a * psi.center * psi.center - kI * psi.momentum * psi.center;

  GaussianState out;
  out.shape = -S2;
  if (!(out.shape.real() > 0.0)) {
    throw DegeneracyError("apply_to_state: propagated state is not normalizable");
  }
  out.center = S1.real() / (2.0 * out.shape.real());
  out.momentum = S1.imag() - 2.0 * out.shape.imag() * out.center;
  const std::complex<double> pref =
      k.prefactor * psi.normalization * std::sqrt(pi / (-P));
  out.normalization = pref * std::exp(S2 * out.center * out.center + S1 * out.center + S0);
  return out;
}

DeltaReport classify_delta(const ComplexGaussianKernel& later,
                           const ComplexGaussianKernel& earlier,
                           std::span<const GaussianState> probes, double tol) {
  if (probes.empty()) throw DomainError("classify_delta: probes must be non-empty");

  DeltaReport report;
  report.tolerance = tol;
  std::complex<double> coeff_sum{0.0, 0.0};
  double worst = 0.0;
  for (const GaussianState& psi : probes) {
    const GaussianState phi = apply_to_state(later, apply_to_state(earlier, psi));
    const std::complex<double> c = inner_product(psi, phi) / psi.norm_squared();
    worst = std::max(worst, relative_residual(psi, phi, c));
    coeff_sum += c;
  }
  report.measured_coefficient = coeff_sum / static_cast<double>(probes.size());
  report.displacement_error = worst;
  report.is_delta_like = worst <= tol;
  return report;
}

} // namespace zigzag
