#include "liealg/borel.hpp"

#include <map>
#include <stdexcept>

#include "liealg/errors.hpp"
#include "liealg/polynomial.hpp"

namespace liealg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CommonNilradical:
      return "common_nilradical";
    case Verdict::CommonBorelOnly:
      return "common_borel";
    case Verdict::Neither:
      return "neither";
  }
  return "unknown";
}

std::string to_string(CrossCheckStatus s) {
  switch (s) {
    case CrossCheckStatus::Consistent:
      return "consistent";
    case CrossCheckStatus::WitnessBeyondCap:
      return "witness_beyond_cap";
    case CrossCheckStatus::Inconsistent:
      return "inconsistent";
  }
  return "unknown";
}

ClassifyReport classify_tuple(const LieAlgebra& L, const std::vector<Element>& tuple,
                              std::size_t witness_depth_cap, const ClosureOptions& options) {
  for (const auto& y : tuple) {
    if (y.size() != L.dim()) throw InputError("tuple element dimension does not match algebra");
  }
  if (!is_semisimple(L)) throw PreconditionError("classify: algebra is not semisimple");

  ClassifyReport report{Verdict::Neither, generated_subalgebra(L, tuple), {}, {}, {}, {}, witness_depth_cap, false};
  const Subalgebra& k = report.k.sub;
  for (const auto& term : series(k, SeriesKind::Derived)) report.derived_dims.push_back(term.dim());

  if (report.derived_dims.back() != 0) {
    report.verdict = Verdict::Neither;
    if (witness_depth_cap >= 2) {
      try {
        report.witness = find_non_nilpotent_witness(L, tuple, witness_depth_cap, options, 2);
      } catch (const LayerCapExceeded&) {
        report.witness_search_truncated = true;
      }
    }
    return report;
  }

  bool all_nilpotent = true;
  for (const auto& b : k.basis()) {
    if (!is_ad_nilpotent(L, b)) {
      all_nilpotent = false;
      break;
    }
  }
  if (all_nilpotent) {
    report.verdict = Verdict::CommonNilradical;
    report.nilpotency_class = nilpotency_class(k.algebra());
    return report;
  }

  report.verdict = Verdict::CommonBorelOnly;
  // In a solvable k every bracket lies in the nilpotent ideal [k, k], so a
  // non-nilpotent basis element forces a non-nilpotent tuple entry.
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!is_ad_nilpotent(L, tuple[i])) {
      report.non_nilpotent_entry = i;
      return report;
    }
  }
  throw std::logic_error("classify: solvable k with a non-nilpotent basis element but nilpotent generators");
}

std::vector<Rational> invariant_values(const LieAlgebra& L, const Element& x) {
  const Polynomial cp = char_poly(ad_matrix(L, x));
  std::vector<Rational> out(L.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = cp.coefficient(i);
  return out;
}

Rational generator_value(const LieAlgebra& L, const BracketExpr& f, const std::vector<Element>& tuple,
                         std::size_t coeff_index) {
  if (coeff_index >= L.dim()) throw InputError("coefficient index out of range");
  return invariant_values(L, eval_expr(L, f, tuple))[coeff_index];
}

namespace {

using SymbolicElement = std::vector<MultiPoly>;

SymbolicElement symbolic_bracket(const LieAlgebra& L, const SymbolicElement& x, const SymbolicElement& y,
                                 std::size_t nvars) {
  const std::size_t n = L.dim();
  SymbolicElement out(n, MultiPoly(nvars));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const auto& terms = L.structure(i, j);
      if (terms.empty()) continue;
      const MultiPoly prod = x[i] * y[j];
      for (const auto& t : terms) out[t.k] += t.coeff * prod;
    }
  }
  return out;
}

class SymbolicEvaluator {
 public:
  SymbolicEvaluator(const LieAlgebra& L, std::size_t arity) : L_(L), nvars_(arity * L.dim()) {
    for (std::size_t j = 0; j < arity; ++j) {
      SymbolicElement y;
      for (std::size_t i = 0; i < L.dim(); ++i) y.push_back(MultiPoly::variable(nvars_, j * L.dim() + i));
      leaves_.push_back(std::move(y));
    }
  }

  const SymbolicElement& eval(const BracketExpr& e) {
    if (e.is_leaf()) return leaves_[e.index() - 1];
    const std::string key = e.to_string();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SymbolicElement v = symbolic_bracket(L_, eval(e.left()), eval(e.right()), nvars_);
    return memo_.emplace(key, std::move(v)).first->second;
  }

 private:
  const LieAlgebra& L_;
  std::size_t nvars_;
  std::vector<SymbolicElement> leaves_;
  std::map<std::string, SymbolicElement> memo_;
};

// Faddeev-LeVerrier over polynomial entries; returns c_0 .. c_{n-1}.
std::vector<MultiPoly> symbolic_char_coeffs(const std::vector<std::vector<MultiPoly>>& a, std::size_t nvars) {
  const std::size_t n = a.size();
  using PolyMatrix = std::vector<std::vector<MultiPoly>>;
  auto multiply = [n, nvars](const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix out(n, std::vector<MultiPoly>(n, MultiPoly(nvars)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (y[k][j].is_zero()) continue;
          out[i][j] += x[i][k] * y[k][j];
        }
      }
    return out;
  };
  std::vector<MultiPoly> c(n + 1, MultiPoly(nvars));
  c[n] = MultiPoly::constant(nvars, Rational(1));
  PolyMatrix mk(n, std::vector<MultiPoly>(n, MultiPoly(nvars)));
  for (std::size_t k = 1; k <= n; ++k) {
    mk = multiply(a, mk);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    const PolyMatrix amk = multiply(a, mk);
    MultiPoly tr(nvars);
    for (std::size_t i = 0; i < n; ++i) tr += amk[i][i];
    c[n - k] = Rational(-1, static_cast<unsigned long>(k)) * tr;
  }
  c.pop_back();
  return c;
}

}  // namespace

SymbolicGenerators symbolic_generators(const LieAlgebra& L, std::size_t arity, std::size_t min_depth,
                                       std::size_t max_depth, std::size_t expr_cap) {
  const std::size_t n = L.dim();
  if (arity == 0 || min_depth == 0 || min_depth > max_depth) {
    throw InputError("symbolic_generators requires arity >= 1 and 1 <= min_depth <= max_depth");
  }
  const std::size_t nvars = arity * n;
  if (nvars > kMaxSymbolicVariables) {
    throw PreconditionError("symbolic export limited to " + std::to_string(kMaxSymbolicVariables) +
                            " variables (arity * dim = " + std::to_string(nvars) + ")");
  }
  ExprEnumerator exprs(arity, max_depth, expr_cap);

  SymbolicGenerators out;
  for (std::size_t j = 0; j < arity; ++j)
    for (std::size_t i = 0; i < n; ++i) out.vars.push_back("y" + std::to_string(j + 1) + "_" + L.basis_labels()[i]);

  SymbolicEvaluator evaluator(L, arity);
  while (auto e = exprs.next()) {
    if (e->depth() < min_depth) {
      if (!e->is_leaf()) evaluator.eval(*e);
      continue;
    }
    const SymbolicElement& value = evaluator.eval(*e);
    std::vector<std::vector<MultiPoly>> ad(n, std::vector<MultiPoly>(n, MultiPoly(nvars)));
    for (std::size_t i = 0; i < n; ++i) {
      if (value[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : L.structure(i, j)) ad[t.k][j] += t.coeff * value[i];
    }
    auto coeffs = symbolic_char_coeffs(ad, nvars);
    for (std::size_t i = 0; i < n; ++i) {
      if (!coeffs[i].is_zero()) out.generators.push_back({*e, i, std::move(coeffs[i])});
    }
  }
  return out;
}

CrossCheckReport cross_check(const LieAlgebra& L, const std::vector<Element>& tuple, std::size_t depth,
                             const ClosureOptions& options) {
  CrossCheckReport report;
  report.verdict = classify_tuple(L, tuple, depth, options).verdict;
  report.depth = depth;

  const ValueClosure closure = value_closure(L, tuple, depth, options);
  for (std::size_t layer = 0; layer < closure.layers.size(); ++layer) {
    for (const auto& entry : closure.layers[layer]) {
      ++report.values_checked;
      bool vanish = true;
      for (const auto& c : invariant_values(L, entry.value)) {
        if (sgn(c) != 0) {
          vanish = false;
          break;
        }
      }
      if (vanish) continue;
      if (layer == 0) {
        report.depth1_all_vanish = false;
        if (!report.depth1_violation) report.depth1_violation = Witness{entry.witness, entry.value};
      } else {
        report.deeper_all_vanish = false;
        if (!report.deeper_violation) report.deeper_violation = Witness{entry.witness, entry.value};
      }
    }
  }

  switch (report.verdict) {
    case Verdict::CommonNilradical:
      report.status = (report.depth1_all_vanish && report.deeper_all_vanish) ? CrossCheckStatus::Consistent
                                                                             : CrossCheckStatus::Inconsistent;
      break;
    case Verdict::CommonBorelOnly:
      report.status = (report.deeper_all_vanish && !report.depth1_all_vanish) ? CrossCheckStatus::Consistent
                                                                              : CrossCheckStatus::Inconsistent;
      break;
    case Verdict::Neither:
      report.status = report.deeper_all_vanish ? CrossCheckStatus::WitnessBeyondCap : CrossCheckStatus::Consistent;
      break;
  }
  return report;
}

}  // namespace liealg
