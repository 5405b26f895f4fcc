#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "tridef/sampling.hpp"

namespace tridef::theory {

/// E ||AB - BA||_F^2 for independent random A, B of dimension n:
///   unit-sphere uniform : 2/n - 2/n^3                      (exact)
///   gaussian i.i.d.     : 2n^3 - 2n                        (exact)
///   rademacher i.i.d.   : the gaussian value; only the orders of the
///                         moments are known, so treat it as order-level.
double expected_sq_norm(EnsembleKind kind, std::size_t n);

/// Leading-order Var(||AB - BA||_F^2):
///   unit-sphere : 8/n^4   (remainder O(n^-5))
///   gaussian    : 24n^4   (remainder O(n^3))
///   rademacher  : gaussian value, order-level only.
/// At small n the dropped remainder is not negligible.
double variance_sq_norm(EnsembleKind kind, std::size_t n);

struct Defect2Moments {
  double expected;               // E defect at alpha=2; equals expected_sq_norm
  double variance_upper_bound;   // 9x the single-norm variance (Cauchy-Schwarz
                                 // over the 3x3 covariance matrix), leading order
};

/// Moments of the alpha=2 defect on the unit sphere. The expectation is an
/// identity (the two cross terms cancel); the variance figure 72/n^4 is an
/// upper bound, not an equality. Unit-sphere only.
Defect2Moments defect2_moments(EnsembleKind kind, std::size_t n);

/// Leading factor of E ||AB - BA||_F on the unit sphere:
/// sqrt(2) * (1/n - 1/n^3)^(1/2), dropping a (1 + O(n^-2)) correction.
double expected_norm_alpha1(std::size_t n);

/// Chebyshev bound on P(defect_2 < 0) for the unit sphere:
/// (72/n^4) / (E defect_2)^2 = 18 / (n^2 (1 - 1/n^2)^2).
/// May exceed 1 at small n; returned as-is (a valid but vacuous bound).
double chebyshev_violation_bound(std::size_t n);

enum class Quality { Exact, LeadingOrder, UpperBound, OrderOnly };

std::string_view to_string(Quality q);

/// Closed-form prediction for the defect at one (ensemble, n, alpha) cell.
/// Fields without a known constant are NaN with quality OrderOnly.
struct TheoryPrediction {
  EnsembleKind ensemble;
  std::size_t n = 0;
  double alpha = 0.0;
  double expected_value = 0.0;
  Quality expected_quality = Quality::OrderOnly;
  double variance_bound = 0.0;
  Quality variance_quality = Quality::OrderOnly;
  double chebyshev_bound = 0.0;  // variance_bound / expected_value^2 when finite
  std::string note;
};

/// nullopt when no closed form exists for the cell (e.g. alpha = 0.5).
std::optional<TheoryPrediction> predict(EnsembleKind kind, std::size_t n, double alpha);

struct DeltaMethodReport {
  double predicted_root_mean = 0.0;     // sqrt(mu)
  double empirical_root_mean = 0.0;     // mean of sqrt(sample)
  double root_mean_rel_dev = 0.0;       // |empirical - predicted| / predicted
  double empirical_root_variance = 0.0; // population variance of sqrt(sample)
  double delta_variance_scale = 0.0;    // sigma2 / (4 mu), first-order prediction
  double root_variance_ratio = 0.0;     // empirical_root_variance / delta_variance_scale
};

/// Compares the moments of sqrt(X) estimated from samples of a nonnegative
/// variable X against the first-order predictions sqrt(mu) and
/// sigma2/(4 mu). Requires mu > 0 and at least one sample.
DeltaMethodReport delta_method_check(double mu, double sigma2, std::span<const double> samples);

/// Least-squares slope of log(y) against log(x). Inputs must be positive
/// and of equal length >= 2.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace tridef::theory
