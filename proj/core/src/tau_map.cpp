#include "zigzag/tau_map.hpp"

#include "zigzag/errors.hpp"

#include <cmath>

namespace zigzag {

double TauMap::t_of_tau(double tau) const {
  if (tau <= tau_c) return tau;
  if (tau < tau_d) return 2.0 * tau_c - tau;
  return tau + 2.0 * (tau_c - tau_d);
}

TauMap build_tau_map(double t_a, double t_d, double t_c, double t_f) {
  if (!std::isfinite(t_a) || !std::isfinite(t_d) || !std::isfinite(t_c) ||
      !std::isfinite(t_f) || !(t_a < t_d && t_d < t_c && t_c < t_f)) {
    throw DomainError("build_tau_map: require t_a < t_d < t_c < t_f");
  }
  TauMap m;
  m.t_a = t_a;
  m.t_d = t_d;
  m.t_c = t_c;
  m.t_f = t_f;
  m.tau_a = t_a;
  m.tau_b = t_d;
  m.tau_c = t_c;
  m.tau_d = 2.0 * t_c - t_d;
  m.tau_f = t_f + 2.0 * (t_c - t_d);
  return m;
}

} // namespace zigzag
