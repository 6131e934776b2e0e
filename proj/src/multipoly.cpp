#include "liealg/multipoly.hpp"

#include <sstream>

#include "liealg/errors.hpp"

namespace liealg {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InputError("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

std::size_t MultiPoly::total_degree() const {
  std::size_t best = 0;
  for (const auto& [exp, c] : terms_) {
    std::size_t d = 0;
    for (auto x : exp) d += x;
    best = std::max(best, d);
  }
  return best;
}

void MultiPoly::add_term(const Exponents& exp, const Rational& c) {
  if (exp.size() != nvars_) throw InputError("exponent vector length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has the wrong number of coordinates");
  Rational acc = 0;
  for (const auto& [exp, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t e = 0; e < exp[i]; ++e) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw InputError("polynomials in different variable sets");
  for (const auto& [exp, c] : other.terms_) add_term(exp, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw InputError("polynomials in different variable sets");
  for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw InputError("polynomials in different variable sets");
  MultiPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  MultiPoly out(a.nvars_);
  if (sgn(s) == 0) return out;
  for (const auto& [exp, c] : a.terms_) out.terms_.emplace(exp, s * c);
  return out;
}

std::string to_text(const MultiPoly& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.nvars()) throw InputError("variable name count mismatch");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [exp, c] = *it;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (auto e : exp) constant = constant && e == 0;
    bool need_star = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (need_star) os << "*";
      os << vars[i];
      if (exp[i] > 1) os << "^" << exp[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace liealg
