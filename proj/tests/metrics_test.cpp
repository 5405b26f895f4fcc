#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_util.hpp"
#include "tridef/metrics.hpp"

using namespace tridef;
using namespace tridef::testutil;

namespace {

// The explicit n=2 triple whose defect is -sqrt(2).
const Matrix kA(2, {2, 1, 1, 1});
const Matrix kB = Matrix::identity(2);
const Matrix kC(2, {0, 1, 1, 0});

}  // namespace

TEST_CASE("alpha must be positive and finite") {
  CHECK_THROWS_AS(Alpha(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(std::nan("")), std::invalid_argument);
  CHECK_NOTHROW(Alpha(0.5));
}

TEST_CASE("distance: identity commutes with everything") {
  const Matrix a = gaussian(4, 0);
  for (double alpha : {0.5, 1.0, 2.0}) {
    CHECK(distance(a, Matrix::identity(4), Alpha(alpha)) == 0.0);
  }
}

TEST_CASE("distance: explicit pair values across alphas") {
  CHECK(distance(kA, kC, Alpha(1.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(distance(kA, kC, Alpha(2.0)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(distance(kA, kC, Alpha(0.5)) ==
        doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-12));
}

TEST_CASE("distance: dimension mismatch throws") {
  CHECK_THROWS_AS(distance(Matrix(2), Matrix(3), Alpha(1.0)), std::invalid_argument);
}

TEST_CASE("defect: the negative pin at -sqrt(2)") {
  const DefectSample s = defect(kA, kB, kC, Alpha(1.0));
  CHECK(s.d_ab == 0.0);
  CHECK(s.d_bc == 0.0);
  CHECK(std::abs(s.d_ac - std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(s.defect + std::sqrt(2.0)) <= 1e-12);

  const DefectSample s2 = defect(kA, kB, kC, Alpha(2.0));
  CHECK(std::abs(s2.defect + 2.0) <= 1e-12);

  const DefectSample s_half = defect(kA, kB, kC, Alpha(0.5));
  CHECK(std::abs(s_half.defect + std::pow(2.0, 0.25)) <= 1e-12);
}

TEST_CASE("defect: identical and commuting triples give zero") {
  const Matrix a = gaussian(5, 2);
  CHECK(defect(a, a, a, Alpha(1.0)).defect == 0.0);

  const std::vector<double> d1 = {1, 2, 3};
  const std::vector<double> d2 = {-1, 0.5, 2};
  const std::vector<double> d3 = {4, -2, 1};
  const DefectSample s =
      defect(Matrix::diagonal(d1), Matrix::diagonal(d2), Matrix::diagonal(d3), Alpha(1.0));
  CHECK(s.defect == 0.0);
}

TEST_CASE("defect sample satisfies its own identities") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    const Matrix a = gaussian(4, trial, MatrixSlot::A);
    const Matrix b = gaussian(4, trial, MatrixSlot::B);
    const Matrix c = gaussian(4, trial, MatrixSlot::C);
    const DefectSample s = defect(a, b, c, Alpha(1.0));
    CHECK(s.defect == s.d_ab + s.d_bc - s.d_ac);
    CHECK(s.defect >= -s.d_ac);
  }
}

TEST_CASE("defect_from_norms matches the matrix route") {
  const Matrix a = gaussian(6, 9, MatrixSlot::A);
  const Matrix b = gaussian(6, 9, MatrixSlot::B);
  const Matrix c = gaussian(6, 9, MatrixSlot::C);
  const DefectSample via_norms = defect_from_norms(
      commutator_norm(a, b), commutator_norm(b, c), commutator_norm(a, c), Alpha(0.7));
  const DefectSample direct = defect(a, b, c, Alpha(0.7));
  CHECK(via_norms.defect == direct.defect);
  CHECK(via_norms.d_ab == direct.d_ab);
}

TEST_CASE("axioms hold on random pairs for several dimensions") {
  for (std::size_t n : {2ul, 5ul, 10ul}) {
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
      const Matrix a = gaussian(n, trial, MatrixSlot::A);
      const Matrix b = gaussian(n, trial, MatrixSlot::B);
      const AxiomReport report = check_axioms(a, b, Alpha(1.0));
      CHECK(report.symmetry_ok);
      CHECK(report.identity_forward_ok);
      CHECK(report.zero_on_commuting_ok);
    }
  }
}

TEST_CASE("commuting pairs sit at distance zero") {
  const std::vector<double> d1 = {1.5, -2, 0.25, 3};
  const std::vector<double> d2 = {2, 7, -1, 0.5};
  const Matrix m1 = Matrix::diagonal(d1);
  const Matrix m2 = Matrix::diagonal(d2);
  CHECK(distance(m1, m2, Alpha(1.0)) <= 1e-10);
  CHECK(check_axioms(m1, m2, Alpha(1.0)).zero_on_commuting_ok);

  // polynomial pair: a commutes with a^2
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const Matrix a = gaussian(5, trial);
    const Matrix a_sq = multiply(a, a);
    CHECK(distance(a, a_sq, Alpha(1.0)) <= 1e-10);
    CHECK(distance(a, a_sq, Alpha(2.0)) <= 1e-10);
  }
}
