#pragma once

#include <cmath>
#include <cstdint>

#include "tridef/matrix.hpp"
#include "tridef/sampling.hpp"

namespace tridef::testutil {

inline constexpr std::uint64_t kTestSeed = 0xABCDEFull;

inline Matrix gaussian(std::size_t n, std::uint64_t trial, MatrixSlot slot = MatrixSlot::A,
                       std::uint64_t seed = kTestSeed) {
  return sample(Ensemble(EnsembleKind::GaussianIID, n), SeedSpec{seed, trial, slot});
}

inline bool close_rel(double x, double y, double rel) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return std::abs(x - y) <= rel * scale || scale < 1e-300;
}

inline bool close_abs(double x, double y, double tol) { return std::abs(x - y) <= tol; }

inline bool matrices_close_rel(const Matrix& a, const Matrix& b, double rel) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!close_rel(a.data()[i], b.data()[i], rel)) return false;
  }
  return true;
}

}  // namespace tridef::testutil
