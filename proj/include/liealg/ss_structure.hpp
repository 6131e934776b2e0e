#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "liealg/bracket_calc.hpp"
#include "liealg/bracket_expr.hpp"
#include "liealg/lie_algebra.hpp"
#include "liealg/subalgebra.hpp"

namespace liealg {

/// (y, h, f) with [h, y] = 2y, [h, f] = -2f, [y, f] = h.
struct Sl2Triple {
  Element y;
  Element h;
  Element f;
};

/// True iff the three sl2 relations hold exactly.
bool satisfies_sl2_relations(const LieAlgebra& L, const Sl2Triple& t);

/// Embeds a nonzero ad-nilpotent y of a semisimple algebra in an sl2-triple.
/// h is taken in the image of ad_y by solving ad_y^2 z = -2y, h = [y, z];
/// f is then solved for inside the -2 eigenspace of ad_h.
Sl2Triple jacobson_morozov(const LieAlgebra& L, const Element& y);

/// Eigenspace decomposition of a semisimple ad_h with integer eigenvalues.
class Grading {
 public:
  Grading(LieAlgebra L, Element h);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const Element& h() const noexcept { return h_; }
  /// Occurring eigenvalues, ascending.
  const std::vector<long>& weights() const noexcept { return weights_; }
  bool has_weight(long i) const { return layers_.contains(i); }
  /// g(h, i); the zero subspace for a weight that does not occur.
  const Subalgebra& layer(long i) const;
  std::size_t layer_dim(long i) const;
  /// Component of x in g(h, i).
  Element project(long i, const Element& x) const;

 private:
  LieAlgebra algebra_;
  Element h_;
  std::vector<long> weights_;
  std::map<long, Subalgebra> layers_;
  Subalgebra zero_;
  // Columns of eigenbasis_ are the layer bases, in ascending weight order.
  Matrix to_eigen_;
  std::map<long, std::pair<std::size_t, std::size_t>> column_range_;
  std::vector<Element> eigenbasis_;
};

/// Throws PreconditionError if ad_h is not semisimple or has a non-integer eigenvalue.
Grading characteristic_grading(const LieAlgebra& L, const Element& h);
inline Element project(const Grading& g, long i, const Element& x) { return g.project(i, x); }
/// Largest occurring weight. Throws PreconditionError for the zero algebra.
long highest_weight(const Grading& g);

/// Span of [g(h, i0), g(h, -i0)] for the highest weight i0 > 0.
Subalgebra lemma2_k(const LieAlgebra& L, const Grading& g);

/// Minimal polynomial of ad_x is squarefree.
bool is_ad_semisimple(const LieAlgebra& L, const Element& x);
/// k = z(k) + [k, k] (direct), the centre is ad-semisimple in L, and [k, k] is
/// zero or semisimple.
bool is_reductive_in(const LieAlgebra& L, const Subalgebra& k);

/// (x ad-nilpotent, pr_0(x) ad-nilpotent) for x in the non-negative part of
/// the grading. Throws InputError if x has a negative-weight component.
std::pair<bool, bool> lemma1_nilpotency_check(const LieAlgebra& L, const Grading& g, const Element& x);

struct DescentStep {
  Sl2Triple triple;
  long top_weight = 0;
  /// z_j = ad_{y_1}^{i0}(y_j)
  std::vector<Element> z;
  /// y'_k = pr_{-i0}(y_k)
  std::vector<Element> y_low;
  /// x[j][k] = pr_0([z_j, y_k])
  std::vector<std::vector<Element>> x;
  /// pr_0([z_j, y_k]) == [z_j, y'_k] for every (j, k)
  bool projection_identity_holds = true;
  Subalgebra k;
  /// (j, k) indices of the basis of k extracted from the x family, in canonical order.
  std::vector<std::pair<std::size_t, std::size_t>> extracted;
  std::vector<Element> extracted_basis;
  /// (j, k) with x[j][k] not ad-nilpotent, in canonical order.
  std::vector<std::pair<std::size_t, std::size_t>> non_nilpotent_x;
};

/// One descent step on a spanning tuple whose first entry is nonzero and nilpotent.
DescentStep mainstep_descent(const LieAlgebra& L, const std::vector<Element>& tuple);

/// I_n expression whose value is [ad_{y_1}^{i0}(y_j), y_k] (0-based j, k).
BracketExpr descent_source_expr(std::size_t arity, long top_weight, std::size_t j, std::size_t k);

struct DirectWitness {
  BracketExpr expr;
  Element value;
};

struct StructuralContradiction {
  /// Ambient element that is not ad-nilpotent.
  Element element;
  /// Number of descent steps taken.
  std::size_t level = 0;
  /// True when `element` spans part of the centre of the final subalgebra.
  bool central = true;
};

struct RefutationStep {
  std::size_t level = 0;
  /// Coordinates in this level's algebra (the ambient algebra at level 0,
  /// the induced algebra of the previous step's k afterwards).
  DescentStep descent;
};

struct RefutationReport {
  std::vector<RefutationStep> trace;
  std::variant<DirectWitness, StructuralContradiction> outcome;

  /// The reported non-nilpotent element, in ambient coordinates.
  const Element& element() const;
};

/// Refutes that `basis` is very nilpotent in a nonzero semisimple algebra.
RefutationReport engel_refuter(const LieAlgebra& L, const std::vector<Element>& basis,
                               const ClosureOptions& options = {});

}  // namespace liealg
