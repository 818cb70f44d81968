#pragma once

#include "zigzag/gaussian_state.hpp"
#include "zigzag/kernel.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>

namespace zigzag {

/// Evenly spaced spatial grid q_j = q_min + j * spacing, j = 0..n-1.
struct Grid {
  int n = 0;
  double q_min = 0.0;
  double q_max = 0.0;

  double spacing() const { return (q_max - q_min) / (n - 1); }
  double point(int j) const { return q_min + j * spacing(); }
  Eigen::VectorXd points() const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// n >= 16 points over [q_min, q_max].
Grid build_grid(int n, double q_min, double q_max);

/// Tagged potential V(q): free, harmonic(omega) with V = w^2 q^2 / 2, or a
/// user-supplied evaluable function.
class Potential {
public:
  enum class Kind { free, harmonic, custom };

  static Potential free();
  static Potential harmonic(double omega);
  static Potential custom(std::function<double(double)> fn);

  double operator()(double q) const;
  Kind kind() const { return kind_; }
  double omega() const;

private:
  Potential() = default;
  Kind kind_ = Kind::free;
  double omega_ = 0.0;
  std::function<double(double)> fn_;
};

enum class Direction { forward, backward };

/// Dense kernel on a grid. Composition interprets entries as an integral
/// kernel with rectangle-rule quadrature: the measure weight (= spacing) is
/// folded into every composition and state application, so the identity
/// operator is I / spacing.
struct KernelMatrix {
  Grid grid;
  Eigen::MatrixXcd entries;
  double measure_weight = 0.0;
  Direction direction = Direction::forward;
};

/// Guard ratio spacing^2 / (2 eps): the kinetic phase between adjacent grid
/// points, which must stay below pi for the entries to remain meaningful
/// samples of the short-time factor.
double nyquist_ratio(const Grid& grid, double eps);
inline constexpr double kNyquistLimit = 3.14159265358979323846;

/// Fraction of rows/columns excluded on each side by the interior metrics.
inline constexpr double kBoundaryFraction = 0.1;

/// Short-time forward step of duration eps:
///
///   K = exp(-i eps V/2) . K_kin(eps) . exp(-i eps V/2)
///
/// realizing (2 pi i eps)^{-1/2} exp[i (q_j - q_k)^2 / (2 eps) - i eps V] on
/// the grid. K_kin is the band-limited free step, exact on all grid-resolvable
/// momenta and exactly unitary; a directly sampled chirp would alias as soon
/// as spacing^2 is comparable to eps. The potential phase is split
/// symmetrically so that the matrix is symmetric and elementwise conjugation
/// equals the adjoint; entries converge to the closed-form factor as
/// spacing -> 0. Throws DiscretizationError when the Nyquist guard fails.
KernelMatrix short_time_forward(const Grid& grid, const Potential& v, double eps);

/// Elementwise complex conjugate of short_time_forward (real potentials).
KernelMatrix short_time_backward(const Grid& grid, const Potential& v, double eps);

/// entries = spacing * (later x earlier); grids must match.
KernelMatrix compose_matrices(const KernelMatrix& later, const KernelMatrix& earlier);

/// `slices`-fold self-composition of the short-time step of duration
/// duration/slices, evaluated by repeated squaring.
KernelMatrix propagate_segment(const Grid& grid, const Potential& v, double duration,
                               int slices, Direction direction);

/// Identity kernel I / spacing.
KernelMatrix identity_kernel_matrix(const Grid& grid);

/// Analytic kernel sampled on the grid, entries(j,k) = k(q_j, q_k).
KernelMatrix sample_kernel(const Grid& grid, const ComplexGaussianKernel& k,
                           Direction direction = Direction::forward);

/// || spacing*k - I ||_F / ||I||_F over the interior 80% of rows and columns.
double identity_deviation(const KernelMatrix& k);

/// || spacing^2 k^dagger k - I ||_F / ||I||_F, interior-restricted.
double unitarity_deviation(const KernelMatrix& k);

/// ||A - B||_F / ||B||_F over the interior block.
double interior_relative_difference(const KernelMatrix& a, const KernelMatrix& b);

/// Quadrature application (K psi)(q_j) = spacing * sum_k entries(j,k) psi_k.
Eigen::VectorXcd apply_to_vector(const KernelMatrix& k, const Eigen::VectorXcd& psi);

/// Packet sampled at the grid points.
Eigen::VectorXcd sample_state(const Grid& grid, const GaussianState& psi);

/// Relative L2 difference of two sampled states over the interior points.
double interior_relative_l2(const Grid& grid, const Eigen::VectorXcd& a,
                            const Eigen::VectorXcd& b);

} // namespace zigzag
