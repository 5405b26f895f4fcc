#include "tridef/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tridef::theory {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_dim(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("predictors are defined for n >= 2, got " + std::to_string(n));
  }
}

}  // namespace

double expected_sq_norm(EnsembleKind kind, std::size_t n) {
  require_dim(n);
  const double nd = static_cast<double>(n);
  switch (kind) {
    case EnsembleKind::UnitSphere:
      return 2.0 / nd - 2.0 / (nd * nd * nd);
    case EnsembleKind::GaussianIID:
    case EnsembleKind::RademacherIID:
      return 2.0 * nd * nd * nd - 2.0 * nd;
  }
  throw std::invalid_argument("unknown ensemble kind");
}

double variance_sq_norm(EnsembleKind kind, std::size_t n) {
  require_dim(n);
  const double nd = static_cast<double>(n);
  switch (kind) {
    case EnsembleKind::UnitSphere:
      return 8.0 / (nd * nd * nd * nd);
    case EnsembleKind::GaussianIID:
    case EnsembleKind::RademacherIID:
      return 24.0 * nd * nd * nd * nd;
  }
  throw std::invalid_argument("unknown ensemble kind");
}

Defect2Moments defect2_moments(EnsembleKind kind, std::size_t n) {
  if (kind != EnsembleKind::UnitSphere) {
    throw std::invalid_argument("defect moments have an exact expectation on the unit-sphere "
                                "ensemble only");
  }
  require_dim(n);
  return Defect2Moments{expected_sq_norm(kind, n), 9.0 * variance_sq_norm(kind, n)};
}

double expected_norm_alpha1(std::size_t n) {
  require_dim(n);
  const double nd = static_cast<double>(n);
  return std::sqrt(2.0) * std::sqrt(1.0 / nd - 1.0 / (nd * nd * nd));
}

double chebyshev_violation_bound(std::size_t n) {
  require_dim(n);
  const double nd = static_cast<double>(n);
  const double shrink = 1.0 - 1.0 / (nd * nd);
  return 18.0 / (nd * nd * shrink * shrink);
}

std::string_view to_string(Quality q) {
  switch (q) {
    case Quality::Exact: return "exact";
    case Quality::LeadingOrder: return "leading-order";
    case Quality::UpperBound: return "upper-bound";
    case Quality::OrderOnly: return "order-only";
  }
  return "unknown";
}

std::optional<TheoryPrediction> predict(EnsembleKind kind, std::size_t n, double alpha) {
  require_dim(n);
  TheoryPrediction p;
  p.ensemble = kind;
  p.n = n;
  p.alpha = alpha;

  if (kind == EnsembleKind::UnitSphere && alpha == 2.0) {
    const Defect2Moments m = defect2_moments(kind, n);
    p.expected_value = m.expected;
    p.expected_quality = Quality::Exact;
    p.variance_bound = m.variance_upper_bound;
    p.variance_quality = Quality::UpperBound;
    p.chebyshev_bound = chebyshev_violation_bound(n);
    p.note = "variance figure bounds, not equals; remainder O(n^-5) dropped";
    return p;
  }
  if (kind == EnsembleKind::UnitSphere && alpha == 1.0) {
    p.expected_value = expected_norm_alpha1(n);
    p.expected_quality = Quality::LeadingOrder;
    p.variance_bound = kNaN;
    p.variance_quality = Quality::OrderOnly;
    p.chebyshev_bound = kNaN;
    p.note = "expectation drops a (1 + O(n^-2)) factor; variance is O(n^-3), constant unknown";
    return p;
  }
  if (kind == EnsembleKind::GaussianIID && alpha == 2.0) {
    p.expected_value = expected_sq_norm(kind, n);
    p.expected_quality = Quality::Exact;
    p.variance_bound = kNaN;
    p.variance_quality = Quality::OrderOnly;
    p.chebyshev_bound = kNaN;
    p.note = "single squared-norm variance is 24n^4 leading order; defect variance untabulated";
    return p;
  }
  if (kind == EnsembleKind::RademacherIID && alpha == 2.0) {
    p.expected_value = expected_sq_norm(kind, n);
    p.expected_quality = Quality::OrderOnly;
    p.variance_bound = kNaN;
    p.variance_quality = Quality::OrderOnly;
    p.chebyshev_bound = kNaN;
    p.note = "only the orders of the moments are known; value shown is the gaussian one";
    return p;
  }
  return std::nullopt;
}

DeltaMethodReport delta_method_check(double mu, double sigma2, std::span<const double> samples) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("delta method check requires mu > 0");
  }
  if (samples.empty()) {
    throw std::invalid_argument("delta method check requires at least one sample");
  }

  // Welford over sqrt(x).
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t count = 0;
  for (double x : samples) {
    const double root = std::sqrt(x);
    ++count;
    const double delta = root - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (root - mean);
  }

  DeltaMethodReport report;
  report.predicted_root_mean = std::sqrt(mu);
  report.empirical_root_mean = mean;
  report.root_mean_rel_dev = std::abs(mean - report.predicted_root_mean) / report.predicted_root_mean;
  report.empirical_root_variance = m2 / static_cast<double>(count);
  report.delta_variance_scale = sigma2 / (4.0 * mu);
  report.root_variance_ratio = report.delta_variance_scale > 0.0
                                   ? report.empirical_root_variance / report.delta_variance_scale
                                   : kNaN;
  return report;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_slope needs two equal-length series of length >= 2");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw std::invalid_argument("loglog_slope needs strictly positive data");
    }
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = count * sxx - sx * sx;
  return (count * sxy - sx * sy) / denom;
}

}  // namespace tridef::theory
