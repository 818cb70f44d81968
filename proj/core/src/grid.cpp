#include "zigzag/grid.hpp"

#include "zigzag/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace zigzag {

using std::numbers::pi;
namespace {
constexpr std::complex<double> kI{0.0, 1.0};
} // namespace

Eigen::VectorXd Grid::points() const {
  Eigen::VectorXd q(n);
  for (int j = 0; j < n; ++j) q[j] = point(j);
  return q;
}

Grid build_grid(int n, double q_min, double q_max) {
  if (n < 16) throw DomainError("build_grid: need at least 16 points");
  if (!(q_min < q_max) || !std::isfinite(q_min) || !std::isfinite(q_max)) {
    throw DomainError("build_grid: require finite q_min < q_max");
  }
  return Grid{n, q_min, q_max};
}

Potential Potential::free() { return Potential{}; }

Potential Potential::harmonic(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("Potential::harmonic: omega must be a positive finite real");
  }
  Potential p;
  p.kind_ = Kind::harmonic;
  p.omega_ = omega;
  return p;
}

Potential Potential::custom(std::function<double(double)> fn) {
  if (!fn) throw DomainError("Potential::custom: missing function");
  Potential p;
  p.kind_ = Kind::custom;
  p.fn_ = std::move(fn);
  return p;
}

double Potential::operator()(double q) const {
  switch (kind_) {
    case Kind::free: return 0.0;
    case Kind::harmonic: return 0.5 * omega_ * omega_ * q * q;
    case Kind::custom: {
      const double v = fn_(q);
      if (!std::isfinite(v)) throw DomainError("Potential::custom: non-finite value on the grid");
      return v;
    }
  }
  return 0.0;
}

double Potential::omega() const {
  if (kind_ != Kind::harmonic) throw DomainError("Potential::omega: not a harmonic potential");
  return omega_;
}

double nyquist_ratio(const Grid& grid, double eps) {
  const double h = grid.spacing();
  return h * h / (2.0 * eps);
}

namespace {

void check_discretization(const Grid& grid, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw DomainError("short_time step: eps must be a positive finite real");
  }
  const double ratio = nyquist_ratio(grid, eps);
  if (!(ratio < kNyquistLimit)) {
    std::ostringstream msg;
    msg << "short_time step: kinetic phase between adjacent grid points is "
        << ratio << " >= pi; refine the grid or enlarge eps";
    throw DiscretizationError(msg.str(), ratio);
  }
}

/// Band-limited free step: circulant in the point index with symbol
/// exp(-i eps k^2 / 2) over the grid-resolvable momenta.
Eigen::MatrixXcd kinetic_step(const Grid& grid, double eps) {
  const int n = grid.n;
  const double h = grid.spacing();
  Eigen::VectorXcd g(n);
  for (int d = 0; d < n; ++d) {
    std::complex<double> acc{0.0, 0.0};
    for (int m = -n / 2; m < (n + 1) / 2; ++m) {
      const double k = 2.0 * pi * m / (n * h);
      acc += std::exp(kI * (k * d * h - 0.5 * eps * k * k));
    }
    g[d] = acc / (n * h);
  }
  Eigen::MatrixXcd K(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      K(j, k) = g[((j - k) % n + n) % n];
    }
  }
  return K;
}

int interior_begin(int n) { return static_cast<int>(std::floor(kBoundaryFraction * n)); }

} // namespace

KernelMatrix short_time_forward(const Grid& grid, const Potential& v, double eps) {
  check_discretization(grid, eps);
  KernelMatrix m;
  m.grid = grid;
  m.measure_weight = grid.spacing();
  m.direction = Direction::forward;
  m.entries = kinetic_step(grid, eps);
  Eigen::VectorXcd half(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    half[j] = std::exp(-kI * 0.5 * eps * v(grid.point(j)));
  }
  m.entries = half.asDiagonal() * m.entries * half.asDiagonal();
  return m;
}

KernelMatrix short_time_backward(const Grid& grid, const Potential& v, double eps) {
  KernelMatrix m = short_time_forward(grid, v, eps);
  m.entries = m.entries.conjugate();
  m.direction = Direction::backward;
  return m;
}

KernelMatrix compose_matrices(const KernelMatrix& later, const KernelMatrix& earlier) {
  if (!(later.grid == earlier.grid)) {
    throw DomainError("compose_matrices: grids must match");
  }
  KernelMatrix m;
  m.grid = later.grid;
  m.measure_weight = later.measure_weight;
  m.direction = later.direction;
  m.entries = later.measure_weight * (later.entries * earlier.entries);
  return m;
}

KernelMatrix propagate_segment(const Grid& grid, const Potential& v, double duration,
                               int slices, Direction direction) {
  if (slices < 1) throw DomainError("propagate_segment: slices must be >= 1");
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw DomainError("propagate_segment: duration must be a positive finite real");
  }
  const double eps = duration / slices;
  const KernelMatrix step = direction == Direction::forward
                                ? short_time_forward(grid, v, eps)
                                : short_time_backward(grid, v, eps);
  // (h K)^slices by repeated squaring; composition is associative, so the
  // association order only moves rounding noise.
  const double h = grid.spacing();
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(grid.n, grid.n);
  Eigen::MatrixXcd base = h * step.entries;
  int e = slices;
  while (e > 0) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  KernelMatrix m;
  m.grid = grid;
  m.measure_weight = h;
  m.direction = direction;
  m.entries = result / h;
  return m;
}

KernelMatrix identity_kernel_matrix(const Grid& grid) {
  KernelMatrix m;
  m.grid = grid;
  m.measure_weight = grid.spacing();
  m.direction = Direction::forward;
  m.entries =
      Eigen::MatrixXcd::Identity(grid.n, grid.n) / grid.spacing();
  return m;
}

KernelMatrix sample_kernel(const Grid& grid, const ComplexGaussianKernel& k,
                           Direction direction) {
  KernelMatrix m;
  m.grid = grid;
  m.measure_weight = grid.spacing();
  m.direction = direction;
  m.entries.resize(grid.n, grid.n);
  for (int j = 0; j < grid.n; ++j) {
    for (int l = 0; l < grid.n; ++l) {
      m.entries(j, l) = k.value(grid.point(j), grid.point(l));
    }
  }
  return m;
}

double identity_deviation(const KernelMatrix& k) {
  const int n = k.grid.n;
  const int b = interior_begin(n);
  const int m = n - 2 * b;
  const Eigen::MatrixXcd sub = k.measure_weight * k.entries.block(b, b, m, m);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(m, m);
  return (sub - I).norm() / I.norm();
}

double unitarity_deviation(const KernelMatrix& k) {
  const int n = k.grid.n;
  const int b = interior_begin(n);
  const int m = n - 2 * b;
  const double w2 = k.measure_weight * k.measure_weight;
  const Eigen::MatrixXcd prod = w2 * (k.entries.adjoint() * k.entries);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(m, m);
  return (prod.block(b, b, m, m) - I).norm() / I.norm();
}

double interior_relative_difference(const KernelMatrix& a, const KernelMatrix& b) {
  if (!(a.grid == b.grid)) {
    throw DomainError("interior_relative_difference: grids must match");
  }
  const int n = a.grid.n;
  const int lo = interior_begin(n);
  const int m = n - 2 * lo;
  const double num = (a.entries.block(lo, lo, m, m) - b.entries.block(lo, lo, m, m)).norm();
  const double den = b.entries.block(lo, lo, m, m).norm();
  return num / den;
}

Eigen::VectorXcd apply_to_vector(const KernelMatrix& k, const Eigen::VectorXcd& psi) {
  if (psi.size() != k.grid.n) throw DomainError("apply_to_vector: size mismatch");
  return k.measure_weight * (k.entries * psi);
}

Eigen::VectorXcd sample_state(const Grid& grid, const GaussianState& psi) {
  Eigen::VectorXcd v(grid.n);
  for (int j = 0; j < grid.n; ++j) v[j] = psi.value(grid.point(j));
  return v;
}

double interior_relative_l2(const Grid& grid, const Eigen::VectorXcd& a,
                            const Eigen::VectorXcd& b) {
  const int lo = interior_begin(grid.n);
  const int m = grid.n - 2 * lo;
  return (a.segment(lo, m) - b.segment(lo, m)).norm() / b.segment(lo, m).norm();
}

} // namespace zigzag
