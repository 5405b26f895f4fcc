#include "tridef/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tridef {

namespace {

void require_dim(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("matrix dimension must be at least 2, got " + std::to_string(n));
  }
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), entries_(n * n, 0.0) { require_dim(n); }

Matrix::Matrix(std::size_t n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
  require_dim(n);
  if (entries_.size() != n * n) {
    throw std::invalid_argument("matrix entry count " + std::to_string(entries_.size()) +
                                " does not match dimension " + std::to_string(n));
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "multiply");
  const std::size_t n = a.dim();
  Matrix out(n);
  const double* pa = a.data();
  const double* pb = b.data();
  double* pc = out.data();
  // i-k-j order: the inner loop runs over contiguous rows of b and out.
  for (std::size_t i = 0; i < n; ++i) {
    const double* arow = pa + i * n;
    double* crow = pc + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = arow[k];
      const double* brow = pb + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += aik * brow[j];
      }
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "commutator");
  Matrix ab = multiply(a, b);
  const Matrix ba = multiply(b, a);
  double* p = ab.data();
  const double* q = ba.data();
  for (std::size_t i = 0; i < ab.size(); ++i) p[i] -= q[i];
  return ab;
}

double frobenius_norm(const Matrix& a) {
  double sum = 0.0;
  const double* p = a.data();
  for (std::size_t i = 0; i < a.size(); ++i) sum += p[i] * p[i];
  return std::sqrt(sum);
}

double commutator_norm(const Matrix& a, const Matrix& b) {
  return frobenius_norm(commutator(a, b));
}

Matrix normalize_to_sphere(const Matrix& a) {
  const double norm = frobenius_norm(a);
  if (norm <= 0.0) {
    throw std::invalid_argument("cannot normalize the zero matrix onto the unit sphere");
  }
  return (1.0 / norm) * a;
}

double trace(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "add");
  Matrix out = a;
  double* p = out.data();
  const double* q = b.data();
  for (std::size_t i = 0; i < out.size(); ++i) p[i] += q[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "subtract");
  Matrix out = a;
  double* p = out.data();
  const double* q = b.data();
  for (std::size_t i = 0; i < out.size(); ++i) p[i] -= q[i];
  return out;
}

Matrix operator*(double scalar, const Matrix& a) {
  Matrix out = a;
  double* p = out.data();
  for (std::size_t i = 0; i < out.size(); ++i) p[i] *= scalar;
  return out;
}

}  // namespace tridef
