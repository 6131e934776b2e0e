#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liealg/rational.hpp"

namespace liealg {

using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial in a fixed number of variables with rational coefficients.
/// Terms are keyed by exponent vector; zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t total_degree() const;

  void add_term(const Exponents& exp, const Rational& c);
  Rational evaluate(const std::vector<Rational>& point) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Plain-text form, e.g. "-4*x_h^2 - 4*x_e*x_f"; terms in descending exponent order.
std::string to_text(const MultiPoly& p, const std::vector<std::string>& vars);

}  // namespace liealg
