#pragma once

#include "zigzag/grid.hpp"
#include "zigzag/kernel.hpp"
#include "zigzag/tau_map.hpp"

#include <complex>
#include <cstdint>

namespace zigzag {

/// One zigzag run: schedule, potential, and grid/slicing resolution.
struct ZigzagScenario {
  TauMap tau_map;
  Potential potential = Potential::free();
  Grid grid;
  int slices_per_unit_time = 1000;
};

/// Middle-segment handling: `backward` is the physical zigzag (the return
/// segment carries the conjugated kernel); `forward_forward` keeps both middle
/// segments forward, a deliberately wrong assembly used as a negative control.
enum class MiddleSegments { backward, forward_forward };

enum class ComparisonPath { analytic, grid };

/// Zigzag-vs-direct comparison with its diagnostics. In the analytic path the
/// matrices hold the closed-form kernels sampled on the scenario grid, the
/// annihilation fields come from classify_delta on the middle pair; in the
/// grid path they are the composed Trotter matrices and the annihilation
/// deviation is identity_deviation of the middle block, with the coefficient
/// read off its interior diagonal.
struct EquivalenceReport {
  KernelMatrix zigzag_amplitude;
  KernelMatrix direct_amplitude;
  double relative_difference = 0.0;
  double annihilation_deviation = 0.0;
  std::complex<double> measured_delta_coefficient{0.0, 0.0};
  bool delta_like = false;
  ComparisonPath path = ComparisonPath::analytic;
};

struct CompareOptions {
  ComparisonPath path = ComparisonPath::analytic;
  MiddleSegments middle = MiddleSegments::backward;
  std::uint64_t probe_seed = 1;
  int probe_count = 5;
  double delta_tolerance = 1e-8;
};

/// Closed-form kernel of the scenario potential over a positive duration
/// (free or harmonic only).
ComplexGaussianKernel segment_kernel(const Potential& v, double duration);

/// Analytic zigzag amplitude: IV o III o II o I with the middle composition
/// routed through the delta-aware algebra.
ComplexGaussianKernel zigzag_kernel(const Potential& v, const TauMap& map,
                                    MiddleSegments middle = MiddleSegments::backward);

/// Analytic direct amplitude: IV o I over physical time only.
ComplexGaussianKernel direct_kernel(const Potential& v, const TauMap& map);

/// Grid realization of the four-segment zigzag amplitude.
KernelMatrix assemble_zigzag(const ZigzagScenario& s,
                             MiddleSegments middle = MiddleSegments::backward);

/// Grid realization of the direct amplitude (outer segments only).
KernelMatrix direct_amplitude(const ZigzagScenario& s);

/// Runs the full comparison on the requested path.
EquivalenceReport compare(const ZigzagScenario& s, const CompareOptions& options = {});

} // namespace zigzag
