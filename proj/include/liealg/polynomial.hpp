#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liealg/matrix.hpp"
#include "liealg/rational.hpp"

namespace liealg {

/// Univariate polynomial over the rationals; coefficient i multiplies t^i.
/// The coefficient list never has trailing zeros, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// t - root
  static Polynomial linear(const Rational& root);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coefficient(std::size_t i) const;

  Rational operator()(const Rational& t) const;
  Matrix operator()(const Matrix& m) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, const Polynomial& a);

/// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p, const std::string& var = "t");

/// det(tI - M) by the Faddeev-LeVerrier recurrence.
Polynomial char_poly(const Matrix& m);
/// Monic minimal polynomial, as the lcm of the local minimal polynomials
/// of the standard basis vectors.
Polynomial min_poly(const Matrix& m);
/// True iff gcd(p, p') is constant. Throws InputError on the zero polynomial.
bool is_squarefree(const Polynomial& p);
/// Distinct integer roots in increasing order. The scan runs over divisors
/// of the constant term of the squarefree part.
std::vector<BigInt> integer_roots(const Polynomial& p);

}  // namespace liealg
