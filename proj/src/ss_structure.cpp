#include "liealg/ss_structure.hpp"

#include <stdexcept>

#include "liealg/errors.hpp"
#include "liealg/polynomial.hpp"

namespace liealg {

bool satisfies_sl2_relations(const LieAlgebra& L, const Sl2Triple& t) {
  return bracket(L, t.h, t.y) == Rational(2) * t.y && bracket(L, t.h, t.f) == Rational(-2) * t.f &&
         bracket(L, t.y, t.f) == t.h;
}

Sl2Triple jacobson_morozov(const LieAlgebra& L, const Element& y) {
  const std::size_t n = L.dim();
  if (y.size() != n) throw InputError("element dimension does not match algebra");
  if (is_zero(y)) throw PreconditionError("jacobson_morozov: element is zero");
  const Matrix ad_y = ad_matrix(L, y);
  if (!is_nilpotent_matrix(ad_y)) throw PreconditionError("jacobson_morozov: element is not ad-nilpotent");
  if (!is_semisimple(L)) throw PreconditionError("jacobson_morozov: algebra is not semisimple");

  // [h, y] = 2y with h = [y, z] means ad_y^2 z = -2y.
  const auto z = solve_linear(ad_y * ad_y, Rational(-2) * y);
  if (!z) throw PreconditionError("jacobson_morozov: no h in the image of ad_y (invalid input)");
  Sl2Triple t{y, ad_y * *z, {}};

  Matrix shifted = ad_matrix(L, t.h);
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) += 2;
  const auto minus_two = mat_kernel(shifted);
  if (minus_two.empty()) throw PreconditionError("jacobson_morozov: ad_h has no -2 eigenvector");
  const Matrix basis = Matrix::from_columns(minus_two, n);
  const auto c = solve_linear(ad_y * basis, t.h);
  if (!c) throw PreconditionError("jacobson_morozov: no f in the -2 eigenspace (invalid input)");
  t.f = basis * *c;

  if (!satisfies_sl2_relations(L, t)) {
    throw PreconditionError("jacobson_morozov: constructed triple fails the sl2 relations");
  }
  return t;
}

Grading::Grading(LieAlgebra L, Element h)
    : algebra_(std::move(L)), h_(std::move(h)), zero_(Subalgebra::zero(algebra_)) {
  const std::size_t n = algebra_.dim();
  if (h_.size() != n) throw InputError("element dimension does not match algebra");
  const Matrix ad_h = ad_matrix(algebra_, h_);
  const Polynomial mp = min_poly(ad_h);
  if (!is_squarefree(mp)) throw PreconditionError("grading: ad_h is not semisimple");

  std::size_t total = 0;
  for (const auto& root : integer_roots(mp)) {
    if (!root.fits_slong_p()) throw PreconditionError("grading: eigenvalue out of range");
    const long w = root.get_si();
    Matrix shifted = ad_h;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= w;
    auto space = mat_kernel(shifted);
    column_range_[w] = {eigenbasis_.size(), eigenbasis_.size() + space.size()};
    total += space.size();
    for (auto& v : space) eigenbasis_.push_back(v);
    layers_.emplace(w, Subalgebra::span(algebra_, space));
    weights_.push_back(w);
  }
  if (total != n) {
    throw PreconditionError("grading: ad_h has a non-integer eigenvalue (eigenspaces cover " +
                            std::to_string(total) + " of " + std::to_string(n) + " dimensions)");
  }
  to_eigen_ = *inverse(Matrix::from_columns(eigenbasis_, n));
}

const Subalgebra& Grading::layer(long i) const {
  const auto it = layers_.find(i);
  return it == layers_.end() ? zero_ : it->second;
}

std::size_t Grading::layer_dim(long i) const {
  const auto it = layers_.find(i);
  return it == layers_.end() ? 0 : it->second.dim();
}

Element Grading::project(long i, const Element& x) const {
  if (x.size() != algebra_.dim()) throw InputError("element dimension does not match algebra");
  Element out(algebra_.dim());
  const auto it = column_range_.find(i);
  if (it == column_range_.end()) return out;
  const Vector coords = to_eigen_ * x;
  for (std::size_t c = it->second.first; c < it->second.second; ++c) axpy(out, coords[c], eigenbasis_[c]);
  return out;
}

Grading characteristic_grading(const LieAlgebra& L, const Element& h) { return Grading(L, h); }

long highest_weight(const Grading& g) {
  if (g.weights().empty()) throw PreconditionError("highest_weight: trivial algebra");
  return g.weights().back();
}

Subalgebra lemma2_k(const LieAlgebra& L, const Grading& g) {
  const long top = highest_weight(g);
  if (top <= 0) throw PreconditionError("lemma2_k: grading is trivial");
  if (!is_semisimple(L)) throw PreconditionError("lemma2_k: algebra is not semisimple");
  const Subalgebra upper = g.layer(top);
  const Subalgebra lower = g.layer(-top);
  std::vector<Element> gens;
  for (const auto& a : upper.basis())
    for (const auto& b : lower.basis()) gens.push_back(bracket(L, a, b));
  Subalgebra k = Subalgebra::span(L, gens);
  if (!k.closed() || !g.layer(0).contains(k)) {
    throw std::logic_error("lemma2_k: span of [g(h,i0), g(h,-i0)] is not a subalgebra of g(h,0)");
  }
  return k;
}

bool is_ad_semisimple(const LieAlgebra& L, const Element& x) {
  return is_squarefree(min_poly(ad_matrix(L, x)));
}

bool is_reductive_in(const LieAlgebra& L, const Subalgebra& k) {
  if (!k.closed()) throw PreconditionError("is_reductive_in: subspace is not closed");
  const Subalgebra z = center(k);
  const Subalgebra d = derived_algebra(k);
  std::vector<Element> both = z.basis();
  both.insert(both.end(), d.basis().begin(), d.basis().end());
  if (z.dim() + d.dim() != k.dim() || rank(both, L.dim()) != k.dim()) return false;
  for (const auto& c : z.basis()) {
    if (!is_ad_semisimple(L, c)) return false;
  }
  return d.dim() == 0 || is_semisimple(d.algebra());
}

std::pair<bool, bool> lemma1_nilpotency_check(const LieAlgebra& L, const Grading& g, const Element& x) {
  for (long w : g.weights()) {
    if (w < 0 && !is_zero(g.project(w, x))) {
      throw InputError("lemma1_nilpotency_check: element has a component of negative weight " +
                       std::to_string(w));
    }
  }
  return {is_ad_nilpotent(L, x), is_ad_nilpotent(L, g.project(0, x))};
}

BracketExpr descent_source_expr(std::size_t arity, long top_weight, std::size_t j, std::size_t k) {
  const BracketExpr first = BracketExpr::leaf(arity, 1);
  BracketExpr e = BracketExpr::leaf(arity, j + 1);
  for (long i = 0; i < top_weight; ++i) e = BracketExpr::node(first, e);
  return BracketExpr::node(e, BracketExpr::leaf(arity, k + 1));
}

DescentStep mainstep_descent(const LieAlgebra& L, const std::vector<Element>& tuple) {
  const std::size_t n = L.dim();
  if (!is_semisimple(L)) throw PreconditionError("mainstep_descent: algebra is not semisimple");
  if (tuple.empty() || rank(tuple, n) != n) throw PreconditionError("mainstep_descent: tuple does not span the algebra");
  if (is_zero(tuple[0]) || !is_ad_nilpotent(L, tuple[0])) {
    throw PreconditionError("mainstep_descent: first element must be nonzero and ad-nilpotent");
  }

  const Sl2Triple triple = jacobson_morozov(L, tuple[0]);
  const Grading g = characteristic_grading(L, triple.h);
  const long top = highest_weight(g);
  const Subalgebra upper = g.layer(top);
  const Subalgebra lower = g.layer(-top);
  const Matrix lift_top = power(ad_matrix(L, tuple[0]), static_cast<unsigned>(top));

  DescentStep step{triple, top, {}, {}, {}, true, lemma2_k(L, g), {}, {}, {}};
  for (const auto& y : tuple) {
    step.z.push_back(lift_top * y);
    if (!upper.contains(step.z.back())) throw std::logic_error("mainstep_descent: z_j outside the top layer");
    step.y_low.push_back(g.project(-top, y));
  }
  if (rank(step.z, n) != upper.dim()) throw std::logic_error("mainstep_descent: z_j do not span the top layer");
  if (rank(step.y_low, n) != lower.dim()) {
    throw std::logic_error("mainstep_descent: projections do not span the bottom layer");
  }

  RowSpace extracted(n);
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    std::vector<Element> row;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      Element x = g.project(0, bracket(L, step.z[j], tuple[k]));
      if (x != bracket(L, step.z[j], step.y_low[k])) step.projection_identity_holds = false;
      if (!step.k.contains(x)) throw std::logic_error("mainstep_descent: x_{j,k} outside k");
      if (extracted.add(x)) {
        step.extracted.emplace_back(j, k);
        step.extracted_basis.push_back(x);
      }
      if (!is_ad_nilpotent(L, x)) step.non_nilpotent_x.emplace_back(j, k);
      row.push_back(std::move(x));
    }
    step.x.push_back(std::move(row));
  }
  if (extracted.dim() != step.k.dim()) throw std::logic_error("mainstep_descent: x_{j,k} do not span k");
  return step;
}

const Element& RefutationReport::element() const {
  if (const auto* w = std::get_if<DirectWitness>(&outcome)) return w->value;
  return std::get<StructuralContradiction>(outcome).element;
}

RefutationReport engel_refuter(const LieAlgebra& L, const std::vector<Element>& basis,
                               const ClosureOptions& options) {
  const std::size_t n = L.dim();
  if (n == 0) throw PreconditionError("engel_refuter: algebra is zero");
  if (!is_semisimple(L)) throw PreconditionError("engel_refuter: algebra is not semisimple");
  if (basis.empty() || rank(basis, n) != n) throw PreconditionError("engel_refuter: basis does not span the algebra");

  RefutationReport report{{}, StructuralContradiction{}};
  if (auto w = find_non_nilpotent_witness(L, basis, 2, options)) {
    report.outcome = DirectWitness{w->expr, w->value};
    return report;
  }

  // Descend through semisimple subalgebras, keeping a map back to ambient coordinates.
  LieAlgebra current = L;
  std::vector<Element> current_basis = basis;
  std::vector<Element> to_ambient;
  for (std::size_t i = 0; i < n; ++i) to_ambient.push_back(L.basis_element(i));
  auto lift = [&to_ambient, n](const Vector& coords) {
    Element out(n);
    for (std::size_t i = 0; i < coords.size(); ++i) axpy(out, coords[i], to_ambient[i]);
    return out;
  };
  auto verified = [&L](Element e) {
    if (is_ad_nilpotent(L, e)) throw std::logic_error("engel_refuter: reported element is ad-nilpotent");
    return e;
  };

  for (std::size_t level = 0;; ++level) {
    report.trace.push_back({level, mainstep_descent(current, current_basis)});
    const DescentStep& step = report.trace.back().descent;

    if (!step.non_nilpotent_x.empty()) {
      const auto [j, k] = step.non_nilpotent_x.front();
      if (level == 0) {
        // x_{j,k} = pr_0([z_j, y_k]) and [z_j, y_k] lies in the non-negative part,
        // so [z_j, y_k] itself is not nilpotent.
        const BracketExpr expr = descent_source_expr(basis.size(), step.top_weight, j, k);
        report.outcome = DirectWitness{expr, verified(eval_expr(L, expr, basis))};
      } else {
        report.outcome = StructuralContradiction{verified(lift(step.x[j][k])), level + 1, false};
      }
      return report;
    }

    const LieAlgebra& k_alg = step.k.algebra();
    if (!is_semisimple(k_alg)) {
      const Subalgebra z = center(step.k);
      report.outcome = StructuralContradiction{verified(lift(z.basis().front())), level + 1, true};
      return report;
    }

    std::vector<Element> next_basis;
    for (const auto& x : step.extracted_basis) next_basis.push_back(*step.k.coordinates(x));
    std::vector<Element> next_to_ambient;
    for (const auto& row : step.k.basis()) next_to_ambient.push_back(lift(row));
    current = k_alg;
    current_basis = std::move(next_basis);
    to_ambient = std::move(next_to_ambient);
  }
}

}  // namespace liealg
