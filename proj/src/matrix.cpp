#include "liealg/matrix.hpp"

#include <utility>

#include "liealg/errors.hpp"

namespace liealg {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

bool Matrix::is_zero() const { return liealg::is_zero(data_); }

Rational Matrix::trace() const {
  if (!is_square()) throw InputError("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shape mismatch in product");
  Matrix out(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        out(i, j) += t;
      }
    }
  }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector shape mismatch");
  Vector out(a.rows());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(v[j]) == 0 || sgn(a(i, j)) == 0) continue;
      t = a(i, j) * v[j];
      out[i] += t;
    }
  }
  return out;
}

Matrix power(const Matrix& a, unsigned exponent) {
  if (!a.is_square()) throw InputError("power of a non-square matrix");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool is_nilpotent_matrix(const Matrix& a) {
  if (!a.is_square()) throw InputError("nilpotency of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return true;
  // Square until the exponent reaches n; A^(2^k) = 0 with 2^k >= n iff A^n = 0.
  Matrix p = a;
  std::size_t e = 1;
  while (e < n) {
    if (p.is_zero()) return true;
    p = p * p;
    e *= 2;
  }
  return p.is_zero();
}

RrefResult mat_rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& r = out.reduced;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  Rational t;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && sgn(r(sel, c)) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(sel, j), r(pivot_row, j));
    }
    const Rational inv = 1 / r(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) r(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || sgn(r(i, c)) == 0) continue;
      const Rational factor = r(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(r(pivot_row, j)) == 0) continue;
        t = factor * r(pivot_row, j);
        r(i, j) -= t;
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const Matrix& m) { return mat_rref(m).rank; }

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols) {
  return rank(Matrix::from_rows(rows, cols));
}

std::vector<Vector> mat_kernel(const Matrix& m) {
  const RrefResult r = mat_rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_linear(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RrefResult r = mat_rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = mat_rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

bool RowSpace::add(const Vector& v) {
  if (v.size() != ambient_dim_) throw InputError("vector length does not match row space");
  const std::size_t k = kept_.size();
  Vector w = v;
  Vector t(k + 1);
  t[k] = 1;
  for (std::size_t r = 0; r < reduced_.size(); ++r) {
    const Rational coef = w[pivots_[r]];
    if (sgn(coef) == 0) continue;
    axpy(w, -coef, reduced_[r]);
    for (std::size_t s = 0; s < k; ++s) {
      if (sgn(transform_[r][s]) != 0) t[s] -= coef * transform_[r][s];
    }
  }
  std::size_t p = 0;
  while (p < w.size() && sgn(w[p]) == 0) ++p;
  if (p == w.size()) return false;

  const Rational inv = 1 / w[p];
  for (auto& x : w) x *= inv;
  for (auto& x : t) x *= inv;
  for (std::size_t r = 0; r < reduced_.size(); ++r) {
    transform_[r].emplace_back(0);
    const Rational c = reduced_[r][p];
    if (sgn(c) == 0) continue;
    axpy(reduced_[r], -c, w);
    axpy(transform_[r], -c, t);
  }
  kept_.push_back(v);
  reduced_.push_back(std::move(w));
  transform_.push_back(std::move(t));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(const Vector& v) const { return coordinates(v).has_value(); }

std::optional<Vector> RowSpace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) throw InputError("vector length does not match row space");
  Vector residual = v;
  Vector coords(kept_.size());
  for (std::size_t r = 0; r < reduced_.size(); ++r) {
    const Rational coef = v[pivots_[r]];
    if (sgn(coef) == 0) continue;
    axpy(residual, -coef, reduced_[r]);
    axpy(coords, coef, transform_[r]);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

}  // namespace liealg
