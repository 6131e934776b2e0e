#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liealg/bracket_expr.hpp"
#include "liealg/lie_algebra.hpp"
#include "liealg/matrix.hpp"

namespace liealg {

/// A subspace of an ambient Lie algebra, stored by linearly independent
/// coordinate rows, together with whether it is closed under the bracket.
/// Closed subspaces also carry their induced structure constants.
class Subalgebra {
 public:
  /// Span of `generators`; dependent generators are dropped, the others kept in order.
  static Subalgebra span(const LieAlgebra& ambient, const std::vector<Element>& generators);
  static Subalgebra whole(const LieAlgebra& ambient);
  static Subalgebra zero(const LieAlgebra& ambient);

  const LieAlgebra& ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const std::vector<Element>& basis() const noexcept { return space_.basis(); }
  Matrix basis_rows() const { return Matrix::from_rows(basis(), ambient_.dim()); }
  bool closed() const noexcept { return closed_; }
  /// Structure constants in the sub-basis; present iff closed().
  const std::optional<LieAlgebra>& induced() const noexcept { return induced_; }
  /// Induced algebra, throwing PreconditionError if the subspace is not closed.
  const LieAlgebra& algebra() const;

  bool contains(const Element& x) const { return space_.contains(x); }
  bool contains(const Subalgebra& other) const;
  /// Coordinates with respect to basis(), or nullopt if x lies outside.
  std::optional<Vector> coordinates(const Element& x) const { return space_.coordinates(x); }
  /// Ambient element with the given sub-basis coordinates.
  Element lift(const Vector& coords) const;

  bool same_space(const Subalgebra& other) const;

 private:
  Subalgebra(LieAlgebra ambient, RowSpace space);

  LieAlgebra ambient_;
  RowSpace space_;
  bool closed_ = false;
  std::optional<LieAlgebra> induced_;
};

enum class SeriesKind { LowerCentral, Derived };

/// Lower central (C^1 = k, C^{m+1} = [k, C^m]) or derived (D^{m+1} = [D^m, D^m])
/// series, up to and including the first term that is zero or equals its predecessor.
std::vector<Subalgebra> series(const LieAlgebra& L, SeriesKind kind);
/// Series of a closed subalgebra, in ambient coordinates. Throws PreconditionError if not closed.
std::vector<Subalgebra> series(const Subalgebra& k, SeriesKind kind);

bool is_nilpotent(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const Subalgebra& k);
bool is_solvable(const Subalgebra& k);
/// Smallest c with C^{c+1} = 0, or nullopt if not nilpotent. The zero algebra has class 0.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& L);

/// [k, k] as a subspace of the ambient algebra.
Subalgebra derived_algebra(const Subalgebra& k);
Subalgebra derived_algebra(const LieAlgebra& L);
/// Centre of a closed subalgebra, in ambient coordinates.
Subalgebra center(const Subalgebra& k);
Subalgebra center(const LieAlgebra& L);
/// {x : K(x, [L, L]) = 0}.
Subalgebra radical(const LieAlgebra& L);
Subalgebra centralizer(const LieAlgebra& L, const Element& h);

struct GeneratedSubalgebra {
  Subalgebra sub;
  /// provenance[i] evaluates to sub.basis()[i] at the generating tuple.
  std::vector<BracketExpr> provenance;
};

/// Smallest bracket-closed subspace containing `tuple`. Each kept basis row is
/// an iterated bracket of the tuple of depth at most dim L.
GeneratedSubalgebra generated_subalgebra(const LieAlgebra& L, const std::vector<Element>& tuple);

}  // namespace liealg
