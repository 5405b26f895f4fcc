#pragma once

#include "tridef/matrix.hpp"

namespace tridef {

/// Exponent applied to the commutator norm. Must be positive and finite.
struct Alpha {
  double value;
  explicit Alpha(double v);
};

/// One observed triple: the three pairwise distances with roles (a,b),
/// (b,c), (a,c), and the signed triangle defect d_ab + d_bc - d_ac.
/// A negative defect witnesses a triangle-inequality violation.
struct DefectSample {
  double d_ab = 0.0;
  double d_bc = 0.0;
  double d_ac = 0.0;
  double defect = 0.0;
};

/// ||ab - ba||_F^alpha. Symmetric in (a, b); zero when a and b commute.
double distance(const Matrix& a, const Matrix& b, Alpha alpha);

DefectSample defect(const Matrix& a, const Matrix& b, const Matrix& c, Alpha alpha);

/// Same computation when the three commutator norms are already known.
DefectSample defect_from_norms(double norm_ab, double norm_bc, double norm_ac, Alpha alpha);

/// Per-axiom verdicts for the distance on one pair:
///   symmetry_ok          d(a,b) == d(b,a) within 1e-12 relative,
///   identity_forward_ok  d(a,a) <= 1e-12,
///   zero_on_commuting_ok commuting inputs give distance <= (1e-12)^alpha.
/// The reverse identity direction is intentionally absent: distinct
/// commuting matrices are at distance zero, which makes this a
/// pseudo-semi-metric rather than a metric.
struct AxiomReport {
  bool symmetry_ok = false;
  bool identity_forward_ok = false;
  bool zero_on_commuting_ok = false;
};

AxiomReport check_axioms(const Matrix& a, const Matrix& b, Alpha alpha);

}  // namespace tridef
