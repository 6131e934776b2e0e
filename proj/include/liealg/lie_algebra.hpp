#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "liealg/matrix.hpp"
#include "liealg/rational.hpp"

namespace liealg {

/// Coordinates of an algebra element in the algebra's basis.
using Element = Vector;

struct StructureTerm {
  std::size_t k;
  Rational coeff;

  friend bool operator==(const StructureTerm&, const StructureTerm&) = default;
};

/// [b_i, b_j] = sum over terms of coeff * b_k, stored for i < j only.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::vector<StructureTerm> terms;
};

/// Finite-dimensional Lie algebra over the rationals given by structure constants.
///
/// Antisymmetry is built into the storage: only pairs i < j are accepted and
/// [b_j, b_i] is derived. The Jacobi identity is not checked on construction;
/// use validate_algebra. Copies share the immutable table.
class LieAlgebra {
 public:
  LieAlgebra();
  /// Throws InputError on out-of-range or non-increasing index pairs,
  /// duplicate pairs, or duplicate output indices within a pair.
  LieAlgebra(std::string name, std::vector<std::string> basis_labels,
             std::vector<BracketEntry> brackets);

  const std::string& name() const noexcept;
  std::size_t dim() const noexcept;
  const std::vector<std::string>& basis_labels() const noexcept;

  /// Nonzero structure constants of [b_i, b_j] for any i, j.
  const std::vector<StructureTerm>& structure(std::size_t i, std::size_t j) const;
  /// Canonical table: pairs i < j with a nonzero bracket, ascending, terms ascending in k.
  std::vector<BracketEntry> brackets() const;

  Element basis_element(std::size_t i) const { return unit_vector(dim(), i); }

 private:
  struct Table;
  std::shared_ptr<const Table> table_;
};

struct JacobiDefect {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Element defect;
};

/// Every basis triple i < j < k with a nonzero Jacobi sum. Empty iff L is a Lie algebra.
std::vector<JacobiDefect> validate_algebra(const LieAlgebra& L);

Element bracket(const LieAlgebra& L, const Element& x, const Element& y);
/// Matrix of y -> [x, y]; column j holds [x, b_j].
Matrix ad_matrix(const LieAlgebra& L, const Element& x);
bool is_ad_nilpotent(const LieAlgebra& L, const Element& x);

Matrix killing_form(const LieAlgebra& L);
/// Cartan's criterion; the zero algebra counts as semisimple.
bool is_semisimple(const LieAlgebra& L);

/// sum_{m >= 0} ad_x^m / m!  for ad-nilpotent x. Throws PreconditionError otherwise.
Matrix exp_ad_nilpotent(const LieAlgebra& L, const Element& x);

/// Same algebra in the basis whose i-th element has coordinate row P[i].
/// Throws PreconditionError if P is singular.
LieAlgebra change_of_basis(const LieAlgebra& L, const Matrix& P);

}  // namespace liealg
