#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liealg {

using BigInt = mpz_class;
/// Exact rational; GMP keeps it canonical (positive denominator, reduced).
using Rational = mpq_class;
/// Coordinates in some fixed basis.
using Vector = std::vector<Rational>;

/// Parses the canonical text form "p" or "p/q" (q > 0, gcd(|p|, q) = 1).
/// Non-canonical spellings such as "2/4" or "1/-2" are rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);

/// a += s * b without temporaries.
void axpy(Vector& a, const Rational& s, const Vector& b);
Rational dot(const Vector& a, const Vector& b);

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept;
};

}  // namespace liealg
