#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "liealg/lie_algebra.hpp"
#include "liealg/matrix.hpp"
#include "liealg/rational.hpp"

namespace test_support {

using liealg::Element;
using liealg::Matrix;
using liealg::Rational;
using liealg::Vector;

/// Seeded source of small random rationals, vectors and matrices.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rational rational(long num_bound = 5, long den_bound = 3) {
    Rational r(liealg::BigInt(integer(-num_bound, num_bound)), liealg::BigInt(integer(1, den_bound)));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(long num_bound = 5, long den_bound = 3) {
    for (;;) {
      Rational r = rational(num_bound, den_bound);
      if (sgn(r) != 0) return r;
    }
  }

  Vector vector(std::size_t n, long num_bound = 5, long den_bound = 3) {
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(num_bound, den_bound));
    return v;
  }

  Matrix matrix(std::size_t rows, std::size_t cols, long num_bound = 5, long den_bound = 3) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(num_bound, den_bound);
    }
    return m;
  }

  Matrix invertible(std::size_t n, long num_bound = 3, long den_bound = 2) {
    for (;;) {
      Matrix m = matrix(n, n, num_bound, den_bound);
      if (liealg::rank(m) == n) return m;
    }
  }

  /// Random combination of the given vectors.
  Vector combination(const std::vector<Vector>& basis, std::size_t dim, long num_bound = 5, long den_bound = 3) {
    Vector v = liealg::zero_vector(dim);
    for (const auto& b : basis) liealg::axpy(v, rational(num_bound, den_bound), b);
    return v;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace test_support
