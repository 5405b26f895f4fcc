#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_util.hpp"
#include "tridef/montecarlo.hpp"
#include "tridef/theory.hpp"

using namespace tridef;
using namespace tridef::testutil;
namespace th = tridef::theory;

TEST_CASE("expected squared norm: pinned values") {
  CHECK(th::expected_sq_norm(EnsembleKind::UnitSphere, 2) == 0.75);
  CHECK(th::expected_sq_norm(EnsembleKind::UnitSphere, 10) ==
        doctest::Approx(0.198).epsilon(1e-15));
  CHECK(th::expected_sq_norm(EnsembleKind::GaussianIID, 2) == 12.0);
  CHECK(th::expected_sq_norm(EnsembleKind::RademacherIID, 2) == 12.0);
  CHECK_THROWS_AS(th::expected_sq_norm(EnsembleKind::UnitSphere, 1), std::invalid_argument);
}

TEST_CASE("expected squared norm decreases towards zero on the unit sphere") {
  double previous = th::expected_sq_norm(EnsembleKind::UnitSphere, 2);
  for (std::size_t n = 3; n <= 200; ++n) {
    const double current = th::expected_sq_norm(EnsembleKind::UnitSphere, n);
    CHECK(current < previous);
    previous = current;
  }
  CHECK(th::expected_sq_norm(EnsembleKind::UnitSphere, 1000000) < 3e-6);
}

TEST_CASE("variance leading terms: pinned values") {
  CHECK(th::variance_sq_norm(EnsembleKind::UnitSphere, 10) == 8e-4);
  CHECK(th::variance_sq_norm(EnsembleKind::GaussianIID, 10) == 240000.0);
  // at n=2 the dropped remainder is not small; the value is the leading term only
  CHECK(th::variance_sq_norm(EnsembleKind::UnitSphere, 2) == 0.5);
}

TEST_CASE("defect moments at alpha=2: identity and bound wiring") {
  const th::Defect2Moments m10 = th::defect2_moments(EnsembleKind::UnitSphere, 10);
  CHECK(m10.expected == th::expected_sq_norm(EnsembleKind::UnitSphere, 10));
  CHECK(m10.variance_upper_bound == doctest::Approx(7.2e-3).epsilon(1e-15));
  CHECK(std::sqrt(m10.variance_upper_bound) == doctest::Approx(0.0849).epsilon(1e-3));

  CHECK(th::defect2_moments(EnsembleKind::UnitSphere, 100).expected ==
        doctest::Approx(0.019998).epsilon(1e-15));

  CHECK_THROWS_AS(th::defect2_moments(EnsembleKind::GaussianIID, 10), std::invalid_argument);
}

TEST_CASE("expected norm at alpha=1: leading factor values") {
  CHECK(th::expected_norm_alpha1(10) == doctest::Approx(std::sqrt(0.198)).epsilon(1e-12));
  CHECK(th::expected_norm_alpha1(2) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
  CHECK(th::expected_norm_alpha1(100) == doctest::Approx(std::sqrt(0.019998)).epsilon(1e-12));
}

TEST_CASE("chebyshev violation bound: values, decay order, limit") {
  CHECK(th::chebyshev_violation_bound(10) ==
        doctest::Approx(18.0 / (100.0 * 0.99 * 0.99)).epsilon(1e-12));
  CHECK(th::chebyshev_violation_bound(100) ==
        doctest::Approx(18.0 / (1e4 * 0.9999 * 0.9999)).epsilon(1e-12));

  const double ratio = th::chebyshev_violation_bound(100) / th::chebyshev_violation_bound(10);
  CHECK(std::abs(ratio * 100.0 - 1.0) < 0.02);

  const double scaled = th::chebyshev_violation_bound(10000) * 1e8;
  CHECK(std::abs(scaled - 18.0) <= 0.18);

  // vacuous but honest at small n: above 1, never clamped
  CHECK(th::chebyshev_violation_bound(2) > 1.0);
}

TEST_CASE("predict: per-cell quality flags") {
  const auto sphere2 = th::predict(EnsembleKind::UnitSphere, 10, 2.0);
  REQUIRE(sphere2.has_value());
  CHECK(sphere2->expected_quality == th::Quality::Exact);
  CHECK(sphere2->variance_quality == th::Quality::UpperBound);
  CHECK(sphere2->expected_value == doctest::Approx(0.198).epsilon(1e-15));
  CHECK(sphere2->chebyshev_bound ==
        doctest::Approx(sphere2->variance_bound / (sphere2->expected_value * sphere2->expected_value))
            .epsilon(1e-12));

  const auto sphere1 = th::predict(EnsembleKind::UnitSphere, 10, 1.0);
  REQUIRE(sphere1.has_value());
  CHECK(sphere1->expected_quality == th::Quality::LeadingOrder);
  CHECK(std::isnan(sphere1->variance_bound));

  const auto gauss = th::predict(EnsembleKind::GaussianIID, 5, 2.0);
  REQUIRE(gauss.has_value());
  CHECK(gauss->expected_quality == th::Quality::Exact);
  CHECK(gauss->expected_value == 240.0);

  const auto rademacher = th::predict(EnsembleKind::RademacherIID, 5, 2.0);
  REQUIRE(rademacher.has_value());
  CHECK(rademacher->expected_quality == th::Quality::OrderOnly);

  CHECK(!th::predict(EnsembleKind::UnitSphere, 10, 0.5));
  CHECK(!th::predict(EnsembleKind::GaussianIID, 10, 1.0));
}

TEST_CASE("delta method check: degenerate and invalid inputs") {
  const std::vector<double> constant(5, 0.25);
  const th::DeltaMethodReport report = th::delta_method_check(0.25, 0.0, constant);
  CHECK(report.predicted_root_mean == 0.5);
  CHECK(report.empirical_root_mean == 0.5);
  CHECK(report.root_mean_rel_dev == 0.0);
  CHECK(report.empirical_root_variance == 0.0);

  CHECK_THROWS_AS(th::delta_method_check(0.0, 1.0, constant), std::invalid_argument);
  CHECK_THROWS_AS(th::delta_method_check(1.0, 1.0, {}), std::invalid_argument);
}

TEST_CASE("delta method check against sampled squared norms at n=25") {
  const std::size_t trials = 10000;
  const auto norms = collect_norm_triples(Ensemble(EnsembleKind::UnitSphere, 25), trials,
                                          kDefaultMasterSeed);
  std::vector<double> squared(norms.size());
  for (std::size_t t = 0; t < norms.size(); ++t) squared[t] = norms[t].ab * norms[t].ab;

  const double mu = th::expected_sq_norm(EnsembleKind::UnitSphere, 25);
  const double sigma2 = th::variance_sq_norm(EnsembleKind::UnitSphere, 25);
  const th::DeltaMethodReport report = th::delta_method_check(mu, sigma2, squared);

  const double se = std::sqrt(report.empirical_root_variance / static_cast<double>(trials));
  CHECK(std::abs(report.empirical_root_mean - report.predicted_root_mean) <= 4.0 * se);
  // first-order variance scale sigma2/(4 mu) should be the right magnitude
  CHECK(report.root_variance_ratio > 0.5);
  CHECK(report.root_variance_ratio < 2.0);
}

TEST_CASE("loglog slope: exact power law and input validation") {
  const std::vector<double> x = {2, 4, 8, 16};
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = 5.0 / (x[i] * x[i] * x[i]);
  CHECK(th::loglog_slope(x, y) == doctest::Approx(-3.0).epsilon(1e-12));

  const std::vector<double> short_x = {1.0};
  CHECK_THROWS_AS(th::loglog_slope(short_x, short_x), std::invalid_argument);
  const std::vector<double> bad = {1.0, -2.0, 3.0, 4.0};
  CHECK_THROWS_AS(th::loglog_slope(x, bad), std::invalid_argument);
}
