#include "zigzag/gaussian_state.hpp"

#include "zigzag/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace zigzag {

using std::numbers::pi;

GaussianState GaussianState::normalized(double center, double width, double momentum) {
  if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(center) ||
      !std::isfinite(momentum)) {
    throw DomainError("GaussianState: width must be a positive finite real");
  }
  GaussianState s;
  s.center = center;
  s.shape = {1.0 / (4.0 * width * width), 0.0};
  s.momentum = momentum;
  s.normalization = {std::pow(2.0 * pi * width * width, -0.25), 0.0};
  return s;
}

double GaussianState::width() const { return 0.5 / std::sqrt(shape.real()); }

std::complex<double> GaussianState::value(double q) const {
  const double d = q - center;
  return normalization *
         std::exp(-shape * d * d + std::complex<double>{0.0, momentum * d});
}

double GaussianState::norm_squared() const {
  // |N|^2 integral exp(-2 Re(shape) (q-c)^2) dq
  const double re = shape.real();
  if (!(re > 0.0)) throw DomainError("GaussianState: non-normalizable shape");
  return std::norm(normalization) * std::sqrt(pi / (2.0 * re));
}

double GaussianState::norm() const { return std::sqrt(norm_squared()); }

namespace detail {

std::complex<double> gaussian_integral(std::complex<double> P, std::complex<double> Q) {
  if (P.real() > 1e-14 * std::abs(P) || std::abs(P) == 0.0) {
    throw DegeneracyError("gaussian_integral: divergent quadratic form");
  }
  return std::sqrt(pi / (-P)) * std::exp(-Q * Q / (4.0 * P));
}

} // namespace detail

std::complex<double> inner_product(const GaussianState& a, const GaussianState& b) {
  // conj(a) b collected as exp(P q^2 + Q q + R)
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> as = std::conj(a.shape);
  const std::complex<double> P = -(as + b.shape);
  const std::complex<double> Q =
      2.0 * as * a.center - i * a.momentum + 2.0 * b.shape * b.center + i * b.momentum;
  const std::complex<double> R = -as * a.center * a.center + i * a.momentum * a.center -
                                 b.shape * b.center * b.center - i * b.momentum * b.center;
  return std::conj(a.normalization) * b.normalization *
         detail::gaussian_integral(P, Q) * std::exp(R);
}

double l2_distance(const GaussianState& a, const GaussianState& b) {
  const double d2 = a.norm_squared() + b.norm_squared() - 2.0 * inner_product(a, b).real();
  return std::sqrt(std::max(0.0, d2));
}

double relative_residual(const GaussianState& psi, const GaussianState& phi,
                         std::complex<double> c) {
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> a1 = psi.shape, a2 = phi.shape;
  const double c1 = psi.center, c2 = phi.center;
  const double p1 = psi.momentum, p2 = phi.momentum;

  // Delta(q) = log phi(q) - log(c psi(q)) = k2 q^2 + k1 q + k0
  const std::complex<double> cN1 = c * psi.normalization;
  std::complex<double> log_ratio;
  const std::complex<double> z = (phi.normalization - cN1) / cN1;
  if (std::abs(z) < 1e-4) {
    log_ratio = z * (1.0 - z * (0.5 - z / 3.0)); // log(1+z) for small z
  } else {
    log_ratio = std::log(phi.normalization / cN1);
  }
  const std::complex<double> k2 = -(a2 - a1);
  const std::complex<double> k1 = 2.0 * (a2 * c2 - a1 * c1) + i * (p2 - p1);
  const std::complex<double> k0 =
      log_ratio - (a2 * c2 * c2 - a1 * c1 * c1) - i * (p2 * c2 - p1 * c1);

  // recentered at u = q - c1
  const std::complex<double> k0u = k0 + k1 * c1 + k2 * c1 * c1;
  const std::complex<double> k1u = k1 + 2.0 * k2 * c1;

  const double span = std::abs(c1) + 6.0 * psi.width();
  const double small = std::abs(k0u) + std::abs(k1u) * span + std::abs(k2) * span * span;
  const double norm1 = psi.norm();

  if (small < 1e-4) {
    // integral |c psi|^2 |Delta|^2 via Gaussian moments; all terms tiny, no
    // cancellation.
    const double ra = a1.real();
    const double mu0 = std::norm(cN1) * std::sqrt(pi / (2.0 * ra));
    const double sigma2 = 1.0 / (4.0 * ra);
    const double mu2 = mu0 * sigma2;
    const double mu4 = 3.0 * mu0 * sigma2 * sigma2;
    const double r2 = mu0 * std::norm(k0u) +
                      mu2 * (std::norm(k1u) + 2.0 * (k0u * std::conj(k2)).real()) +
                      mu4 * std::norm(k2);
    return std::sqrt(std::max(0.0, r2)) / norm1;
  }

  const double r2 = phi.norm_squared() + std::norm(c) * psi.norm_squared() -
                    2.0 * (std::conj(c) * inner_product(psi, phi)).real();
  return std::sqrt(std::max(0.0, r2)) / norm1;
}

std::vector<GaussianState> random_probe_states(std::uint64_t seed, int count) {
  if (count < 1) throw DomainError("random_probe_states: count must be >= 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    // Fixed 53-bit mapping; avoids implementation-defined distributions.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };
  std::vector<GaussianState> probes;
  probes.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double center = uniform(-2.0, 2.0);
    const double width = uniform(0.5, 2.0);
    const double momentum = uniform(-2.0, 2.0);
    probes.push_back(GaussianState::normalized(center, width, momentum));
  }
  return probes;
}

} // namespace zigzag
