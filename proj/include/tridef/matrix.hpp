#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tridef {

/// Dense square real matrix, row-major, double precision.
///
/// The dimension is fixed at construction and must be at least 2; entries
/// supplied by callers are rejected unless finite. Values are immutable in
/// all library code paths (operations return fresh matrices), so instances
/// can be shared freely across threads.
class Matrix {
 public:
  explicit Matrix(std::size_t n);                      // zero matrix
  Matrix(std::size_t n, std::vector<double> entries);  // row-major, n*n values

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);

  std::size_t dim() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  double* data() { return entries_.data(); }
  const double* data() const { return entries_.data(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

/// Standard product a*b. Dimensions must match.
Matrix multiply(const Matrix& a, const Matrix& b);

/// a*b - b*a. Both products are fully accumulated before the entrywise
/// subtraction, so commutator(a,b) is the exact floating-point negation of
/// commutator(b,a).
Matrix commutator(const Matrix& a, const Matrix& b);

/// sqrt of the sum of squared entries; 0 iff the matrix is zero.
double frobenius_norm(const Matrix& a);

/// Frobenius norm of the commutator of a and b.
double commutator_norm(const Matrix& a, const Matrix& b);

/// a / ||a||_F. Throws std::invalid_argument for the zero matrix.
Matrix normalize_to_sphere(const Matrix& a);

double trace(const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double scalar, const Matrix& a);

}  // namespace tridef
