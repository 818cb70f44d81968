#include "zigzag/field_modes.hpp"
#include "zigzag/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zigzag;
using std::numbers::pi;

TEST_CASE("mode construction follows the dispersion relation") {
  const ModeSet set = build_mode_set(1.0, 3.0, 10);
  REQUIRE(set.momenta.size() == 10);
  CHECK(set.momenta.front() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(set.momenta.back() == doctest::Approx(3.0).epsilon(1e-15));
  for (std::size_t j = 0; j < set.momenta.size(); ++j) {
    const double p = set.momenta[j];
    const double w = set.frequencies[j];
    CHECK(w * w - p * p - 1.0 == doctest::Approx(0.0).epsilon(1e-14));
    if (j > 0) CHECK(set.frequencies[j] > set.frequencies[j - 1]);
  }

  // massless dispersion and the sqrt(2) example
  CHECK(build_mode_set(0.0, 3.0, 1).frequencies[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(build_mode_set(1.0, 1.0, 1).frequencies[0] ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  CHECK_THROWS_AS(build_mode_set(-1.0, 3.0, 10), DomainError);
  CHECK_THROWS_AS(build_mode_set(1.0, 3.0, 0), DomainError);
  CHECK_THROWS_AS(build_mode_set(1.0, 0.0, 10), DomainError);
}

TEST_CASE("single-mode zigzag check") {
  const TauMap schedule = build_tau_map(0.0, 1.0, 2.0, 3.0);
  const ModeCheckResult r = mode_zigzag_check(1.0, schedule);
  CHECK(r.relative_error <= 1e-10);
  CHECK(std::abs(std::abs(r.delta_coefficient) - 1.0) <= 1e-8);

  // near-zero frequency behaves like the free check
  const ModeCheckResult low = mode_zigzag_check(1e-4, schedule);
  CHECK(low.relative_error <= 1e-10);

  // omega * (backward segment) = pi is a caustic
  CHECK_THROWS_AS(mode_zigzag_check(pi, schedule), CausticError);
  CHECK_THROWS_AS(mode_zigzag_check(-1.0, schedule), DomainError);
}

TEST_CASE("field report: ten modes factorize") {
  const TauMap schedule = build_tau_map(0.0, 1.0, 2.0, 3.0);
  const ModeSet set = build_mode_set(1.0, 3.0, 10);
  const FieldAmplitudeReport r = field_transition_report(set, schedule);
  REQUIRE(r.per_mode.size() == 10);
  CHECK(r.skipped.empty());
  CHECK_FALSE(r.all_skipped);
  for (const auto& m : r.per_mode) CHECK(m.relative_error <= 1e-9);
  CHECK(r.product_consistency_error <= 1e-9);
}

TEST_CASE("per-mode results do not depend on the other modes present") {
  const TauMap schedule = build_tau_map(0.0, 1.0, 2.0, 3.0);
  const ModeSet ten = build_mode_set(1.0, 3.0, 10);
  const FieldAmplitudeReport full = field_transition_report(ten, schedule);

  // a single mode reduces to mode_zigzag_check, with identical numbers
  ModeSet one;
  one.mass = 1.0;
  one.momenta = {ten.momenta[4]};
  one.frequencies = {ten.frequencies[4]};
  const FieldAmplitudeReport solo = field_transition_report(one, schedule);
  REQUIRE(solo.per_mode.size() == 1);
  CHECK(solo.per_mode[0].relative_error == full.per_mode[4].relative_error);
  CHECK(solo.per_mode[0].delta_coefficient == full.per_mode[4].delta_coefficient);

  const ModeCheckResult direct = mode_zigzag_check(ten.frequencies[4], schedule);
  CHECK(direct.relative_error == solo.per_mode[0].relative_error);
}

TEST_CASE("caustic modes are skipped and an all-caustic schedule is flagged") {
  const TauMap schedule = build_tau_map(0.0, 1.0, 2.0, 3.0);

  // mass pi puts the lightest of these modes within the caustic band of the
  // unit-duration middle segments
  ModeSet set;
  set.mass = pi;
  set.momenta = {1e-5, 1.0};
  set.frequencies = {std::sqrt(1e-10 + pi * pi), std::sqrt(1.0 + pi * pi)};
  const FieldAmplitudeReport r = field_transition_report(set, schedule);
  CHECK(r.per_mode.size() == 1);
  REQUIRE(r.skipped.size() == 1);
  CHECK(r.skipped[0].frequency == doctest::Approx(pi).epsilon(1e-9));

  ModeSet all_caustic;
  all_caustic.mass = pi;
  all_caustic.momenta = {1e-5};
  all_caustic.frequencies = {std::sqrt(1e-10 + pi * pi)};
  const FieldAmplitudeReport flagged = field_transition_report(all_caustic, schedule);
  CHECK(flagged.per_mode.empty());
  CHECK(flagged.all_skipped);
  CHECK(std::isnan(flagged.product_consistency_error));
}
