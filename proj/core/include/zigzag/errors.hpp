#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

/// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid argument or precondition violation (bad durations, orderings, grids).
class DomainError : public Error {
  using Error::Error;
};

/// Oscillator duration inside the caustic exclusion band (sin(wT) ~ 0).
class CausticError : public Error {
  using Error::Error;
};

/// Degenerate Gaussian integral: vanishing midpoint coefficient outside the
/// recognized delta route, or a divergent state integral.
class DegeneracyError : public Error {
  using Error::Error;
};

/// Grid/step combination that cannot resolve the kinetic phase.
/// Carries the offending ratio spacing^2 / (2 eps).
class DiscretizationError : public Error {
public:
  DiscretizationError(const std::string& what, double ratio)
      : Error(what), ratio_(ratio) {}

  double ratio() const { return ratio_; }

private:
  double ratio_;
};

} // namespace zigzag
