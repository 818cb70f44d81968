#include "zigzag/engine.hpp"

#include "zigzag/errors.hpp"

#include <cmath>

namespace zigzag {

namespace {

int slice_count(double duration, int slices_per_unit_time) {
  if (slices_per_unit_time < 1) {
    throw DomainError("ZigzagScenario: slices_per_unit_time must be >= 1");
  }
  return std::max(1, static_cast<int>(std::ceil(duration * slices_per_unit_time)));
}

KernelMatrix grid_segment(const ZigzagScenario& s, double duration, Direction direction) {
  const int slices = slice_count(duration, s.slices_per_unit_time);
  return propagate_segment(s.grid, s.potential, duration, slices, direction);
}

} // namespace

ComplexGaussianKernel segment_kernel(const Potential& v, double duration) {
  switch (v.kind()) {
    case Potential::Kind::free: return make_free_kernel(duration);
    case Potential::Kind::harmonic: return make_oscillator_kernel(v.omega(), duration);
    case Potential::Kind::custom:
      throw DomainError("segment_kernel: custom potentials have no closed form; use the grid path");
  }
  throw DomainError("segment_kernel: unknown potential kind");
}

ComplexGaussianKernel zigzag_kernel(const Potential& v, const TauMap& map,
                                    MiddleSegments middle) {
  const ComplexGaussianKernel initial = segment_kernel(v, map.segment_initial());
  const ComplexGaussianKernel outbound = segment_kernel(v, map.segment_outbound());
  const ComplexGaussianKernel inbound = middle == MiddleSegments::backward
                                            ? reverse_kernel(outbound)
                                            : outbound;
  const ComplexGaussianKernel final_leg = segment_kernel(v, map.segment_final());

  Composition chain = compose(inbound, outbound);
  chain = compose(chain, Composition{initial});
  chain = compose(Composition{final_leg}, chain);
  if (!std::holds_alternative<ComplexGaussianKernel>(chain)) {
    throw DegeneracyError("zigzag_kernel: assembled amplitude degenerated to a delta");
  }
  return std::get<ComplexGaussianKernel>(chain);
}

ComplexGaussianKernel direct_kernel(const Potential& v, const TauMap& map) {
  return compose_gaussian(segment_kernel(v, map.segment_final()),
                          segment_kernel(v, map.segment_initial()));
}

KernelMatrix assemble_zigzag(const ZigzagScenario& s, MiddleSegments middle) {
  const KernelMatrix initial = grid_segment(s, s.tau_map.segment_initial(), Direction::forward);
  const KernelMatrix outbound = grid_segment(s, s.tau_map.segment_outbound(), Direction::forward);
  const KernelMatrix inbound =
      grid_segment(s, s.tau_map.segment_return(),
                   middle == MiddleSegments::backward ? Direction::backward
                                                      : Direction::forward);
  const KernelMatrix final_leg = grid_segment(s, s.tau_map.segment_final(), Direction::forward);
  return compose_matrices(final_leg,
                          compose_matrices(inbound, compose_matrices(outbound, initial)));
}

KernelMatrix direct_amplitude(const ZigzagScenario& s) {
  const KernelMatrix initial = grid_segment(s, s.tau_map.segment_initial(), Direction::forward);
  const KernelMatrix final_leg = grid_segment(s, s.tau_map.segment_final(), Direction::forward);
  return compose_matrices(final_leg, initial);
}

EquivalenceReport compare(const ZigzagScenario& s, const CompareOptions& options) {
  EquivalenceReport report;
  report.path = options.path;

  if (options.path == ComparisonPath::analytic) {
    const ComplexGaussianKernel zig = zigzag_kernel(s.potential, s.tau_map, options.middle);
    const ComplexGaussianKernel dir = direct_kernel(s.potential, s.tau_map);
    report.zigzag_amplitude = sample_kernel(s.grid, zig);
    report.direct_amplitude = sample_kernel(s.grid, dir);
    report.relative_difference =
        interior_relative_difference(report.zigzag_amplitude, report.direct_amplitude);

    const ComplexGaussianKernel outbound =
        segment_kernel(s.potential, s.tau_map.segment_outbound());
    const ComplexGaussianKernel inbound = options.middle == MiddleSegments::backward
                                              ? reverse_kernel(outbound)
                                              : outbound;
    const auto probes = random_probe_states(options.probe_seed, options.probe_count);
    const DeltaReport delta =
        classify_delta(inbound, outbound, probes, options.delta_tolerance);
    report.annihilation_deviation = delta.displacement_error;
    report.measured_delta_coefficient = delta.measured_coefficient;
    report.delta_like = delta.is_delta_like;
    return report;
  }

  const KernelMatrix outbound = grid_segment(s, s.tau_map.segment_outbound(), Direction::forward);
  const KernelMatrix inbound =
      grid_segment(s, s.tau_map.segment_return(),
                   options.middle == MiddleSegments::backward ? Direction::backward
                                                              : Direction::forward);
  const KernelMatrix initial = grid_segment(s, s.tau_map.segment_initial(), Direction::forward);
  const KernelMatrix final_leg = grid_segment(s, s.tau_map.segment_final(), Direction::forward);

  const KernelMatrix middle_block = compose_matrices(inbound, outbound);
  report.zigzag_amplitude =
      compose_matrices(final_leg, compose_matrices(middle_block, initial));
  report.direct_amplitude = compose_matrices(final_leg, initial);
  report.relative_difference =
      interior_relative_difference(report.zigzag_amplitude, report.direct_amplitude);
  report.annihilation_deviation = identity_deviation(middle_block);

  // c in middle_block ~ c * I/spacing, read off the interior diagonal.
  const int n = s.grid.n;
  const int lo = static_cast<int>(std::floor(kBoundaryFraction * n));
  std::complex<double> diag_mean{0.0, 0.0};
  for (int j = lo; j < n - lo; ++j) diag_mean += middle_block.entries(j, j);
  diag_mean *= s.grid.spacing() / static_cast<double>(n - 2 * lo);
  report.measured_delta_coefficient = diag_mean;
  report.delta_like = report.annihilation_deviation <= 1e-2;
  return report;
}

} // namespace zigzag
