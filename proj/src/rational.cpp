#include "liealg/rational.hpp"

#include <cctype>

#include "liealg/errors.hpp"

namespace liealg {
namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && s[0] == '-') start = 1;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  // no leading zeros except the literal "0"
  if (s.size() - start > 1 && s[start] == '0') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text, true) || num_text == "-0") {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  BigInt num(std::string(num_text), 10);
  if (slash == std::string_view::npos) return Rational(num);

  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text, false)) {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  BigInt den(std::string(den_text), 10);
  if (den <= 1) {
    throw InputError("rational \"" + std::string(text) + "\" must have denominator > 1 or omit it");
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    throw InputError("rational \"" + std::string(text) + "\" is not in lowest terms");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator-(const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out(v.size());
  if (sgn(s) == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Vector& operator+=(Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  if (sgn(s) == 0) return;
  Rational t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(b[i]) == 0) continue;
    t = s * b[i];
    a[i] += t;
  }
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  Rational acc = 0;
  Rational t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
    t = a[i] * b[i];
    acc += t;
  }
  return acc;
}

std::size_t VectorHash::operator()(const Vector& v) const noexcept {
  std::size_t h = v.size();
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& x : v) {
    const mpz_srcptr num = x.get_num_mpz_t();
    const mpz_srcptr den = x.get_den_mpz_t();
    mix(static_cast<std::size_t>(mpz_sgn(num)));
    mix(mpz_size(num) > 0 ? static_cast<std::size_t>(mpz_getlimbn(num, 0)) : 0);
    mix(static_cast<std::size_t>(mpz_getlimbn(den, 0)));
  }
  return h;
}

}  // namespace liealg
