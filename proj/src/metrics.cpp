#include "tridef/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tridef {

namespace {
constexpr double kAxiomTol = 1e-12;
}

Alpha::Alpha(double v) : value(v) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw std::invalid_argument("alpha must be a positive finite real, got " + std::to_string(v));
  }
}

double distance(const Matrix& a, const Matrix& b, Alpha alpha) {
  return std::pow(commutator_norm(a, b), alpha.value);
}

DefectSample defect_from_norms(double norm_ab, double norm_bc, double norm_ac, Alpha alpha) {
  DefectSample s;
  s.d_ab = std::pow(norm_ab, alpha.value);
  s.d_bc = std::pow(norm_bc, alpha.value);
  s.d_ac = std::pow(norm_ac, alpha.value);
  s.defect = s.d_ab + s.d_bc - s.d_ac;
  return s;
}

DefectSample defect(const Matrix& a, const Matrix& b, const Matrix& c, Alpha alpha) {
  return defect_from_norms(commutator_norm(a, b), commutator_norm(b, c),
                           commutator_norm(a, c), alpha);
}

AxiomReport check_axioms(const Matrix& a, const Matrix& b, Alpha alpha) {
  AxiomReport report;

  const double d_ab = distance(a, b, alpha);
  const double d_ba = distance(b, a, alpha);
  report.symmetry_ok = std::abs(d_ab - d_ba) <= kAxiomTol * std::max(1.0, d_ab);

  report.identity_forward_ok = distance(a, a, alpha) <= kAxiomTol;

  const double norm = commutator_norm(a, b);
  if (norm <= kAxiomTol) {
    report.zero_on_commuting_ok = d_ab <= std::pow(kAxiomTol, alpha.value);
  } else {
    report.zero_on_commuting_ok = true;  // vacuous: the pair does not commute
  }
  return report;
}

}  // namespace tridef
