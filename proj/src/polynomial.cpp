#include "liealg/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "liealg/errors.hpp"

namespace liealg {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw InputError("polynomial evaluated at a non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return (1 / leading()) * (*this);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) - b.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> out(a.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a.coefficients()[i];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& d = b.coefficients();
  if (rem.size() < d.size()) return {Polynomial{}, a};
  std::vector<Rational> quot(rem.size() - d.size() + 1);
  const Rational lead_inv = 1 / d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + d.size() - 1] * lead_inv;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return divmod(a * b, gcd(a, b)).first.monic();
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    Rational mag = abs(c[k]);
    if (first) {
      if (sgn(c[k]) < 0) os << "-";
    } else {
      os << (sgn(c[k]) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (!unit || k == 0) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const Matrix amk = m * mk;
    c[n - k] = -amk.trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

Polynomial min_poly(const Matrix& m) {
  if (!m.is_square()) throw InputError("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Polynomial result({Rational(1)});
  for (std::size_t i = 0; i < n; ++i) {
    // Krylov sequence e_i, A e_i, A^2 e_i, ... until the first dependency.
    RowSpace krylov(n);
    Vector v = unit_vector(n, i);
    while (krylov.add(v)) v = m * v;
    const Vector coords = *krylov.coordinates(v);
    std::vector<Rational> local(coords.size() + 1);
    for (std::size_t j = 0; j < coords.size(); ++j) local[j] = -coords[j];
    local[coords.size()] = 1;
    result = lcm(result, Polynomial(std::move(local)));
  }
  return result;
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw InputError("squarefree test of the zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<BigInt> integer_roots(const Polynomial& p) {
  if (p.is_zero()) throw InputError("integer roots of the zero polynomial");
  Polynomial sf = divmod(p, gcd(p, p.derivative())).first.monic();

  std::vector<BigInt> roots;
  // strip the factor t
  auto coeffs = sf.coefficients();
  std::size_t shift = 0;
  while (shift < coeffs.size() && sgn(coeffs[shift]) == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
  if (coeffs.size() <= 1) return roots;

  // Integer roots of the denominator-cleared polynomial divide its constant term.
  BigInt den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const Rational scaled_const = coeffs.front() * Rational(den);
  const BigInt constant = abs(scaled_const.get_num());
  const Polynomial reduced(coeffs);

  // Cauchy bound on the absolute value of any root.
  Rational max_ratio = 0;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    const Rational ratio = abs(coeffs[i] / coeffs.back());
    if (ratio > max_ratio) max_ratio = ratio;
  }
  const BigInt bound = BigInt(1) + max_ratio.get_num() / max_ratio.get_den();

  std::vector<BigInt> divisors;
  for (BigInt d = 1; d <= bound && d * d <= constant; ++d) {
    if (constant % d == 0) {
      divisors.push_back(d);
      if (d * d != constant && constant / d <= bound) divisors.push_back(constant / d);
    }
  }
  for (const auto& d : divisors) {
    for (const BigInt& cand : {BigInt(d), BigInt(-d)}) {
      if (sgn(reduced(Rational(cand))) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace liealg
