#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liealg/rational.hpp"

namespace liealg {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Each vector becomes one row; all must have length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  std::vector<Vector> row_list() const;

  bool is_zero() const;
  Rational trace() const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

Matrix power(const Matrix& a, unsigned exponent);
bool is_nilpotent_matrix(const Matrix& a);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult mat_rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);
/// Basis of the right null space, one vector per free column.
std::vector<Vector> mat_kernel(const Matrix& m);
/// Some x with m x = b; free variables are set to zero.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Incrementally maintained row space with a reduced echelon form.
///
/// Vectors are added one at a time; independent ones are kept in insertion
/// order, and coordinates of any member vector with respect to the kept
/// vectors can be recovered exactly.
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return kept_.size(); }
  const std::vector<Vector>& basis() const noexcept { return kept_; }

  /// Adds `v` if it is independent of the current span. Returns true if added.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  /// Coordinates of `v` with respect to basis(), or nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> kept_;
  // reduced_[r] has a 1 at pivots_[r] and 0 at every other pivot column;
  // reduced_[r] = sum_s transform_[r][s] * kept_[s].
  std::vector<Vector> reduced_;
  std::vector<Vector> transform_;
  std::vector<std::size_t> pivots_;
};

}  // namespace liealg
