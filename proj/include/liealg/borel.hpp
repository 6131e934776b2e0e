#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liealg/bracket_calc.hpp"
#include "liealg/bracket_expr.hpp"
#include "liealg/lie_algebra.hpp"
#include "liealg/multipoly.hpp"
#include "liealg/subalgebra.hpp"

namespace liealg {

enum class Verdict { CommonNilradical, CommonBorelOnly, Neither };

std::string to_string(Verdict v);

struct ClassifyReport {
  Verdict verdict = Verdict::Neither;
  /// Subalgebra generated by the tuple and the iterated brackets spanning it.
  GeneratedSubalgebra k;
  /// Dimensions of the derived series of k (always filled).
  std::vector<std::size_t> derived_dims;
  /// CommonNilradical: nilpotency class of k.
  std::optional<std::size_t> nilpotency_class;
  /// CommonBorelOnly: 0-based index of a tuple entry that is not ad-nilpotent.
  std::optional<std::size_t> non_nilpotent_entry;
  /// Neither: a non-nilpotent bracket of depth >= 2, if found within the cap.
  std::optional<Witness> witness;
  std::size_t witness_depth_cap = 0;
  /// The witness search stopped on the layer cap before reaching the depth cap.
  bool witness_search_truncated = false;
};

/// Decides whether a tuple of a semisimple algebra lies in a common nilradical,
/// only in a common Borel subalgebra, or in neither, via the generated subalgebra.
ClassifyReport classify_tuple(const LieAlgebra& L, const std::vector<Element>& tuple,
                              std::size_t witness_depth_cap, const ClosureOptions& options = {});

/// Non-leading coefficients c_0 .. c_{dim-1} of det(tI - ad_x).
std::vector<Rational> invariant_values(const LieAlgebra& L, const Element& x);
/// invariant_values(L, f(tuple))[coeff_index].
Rational generator_value(const LieAlgebra& L, const BracketExpr& f, const std::vector<Element>& tuple,
                         std::size_t coeff_index);

struct SymbolicGenerator {
  BracketExpr expr;
  std::size_t coeff_index;
  MultiPoly poly;
};

struct SymbolicGenerators {
  /// Variable j * dim + i is coordinate i of tuple entry j, named "y<j+1>_<label i>".
  std::vector<std::string> vars;
  std::vector<SymbolicGenerator> generators;
};

inline constexpr std::size_t kMaxSymbolicVariables = 12;

/// Expanded polynomials p_i o f for every f of depth in [min_depth, max_depth]
/// and every coefficient index i, zero polynomials omitted.
SymbolicGenerators symbolic_generators(const LieAlgebra& L, std::size_t arity, std::size_t min_depth,
                                       std::size_t max_depth, std::size_t expr_cap = kDefaultEnumerationCap);

enum class CrossCheckStatus { Consistent, WitnessBeyondCap, Inconsistent };
std::string to_string(CrossCheckStatus s);

struct CrossCheckReport {
  Verdict verdict = Verdict::Neither;
  std::size_t depth = 0;
  std::size_t values_checked = 0;
  bool depth1_all_vanish = true;
  bool deeper_all_vanish = true;
  /// First value (canonical order) with a nonzero invariant, per depth band.
  std::optional<Witness> depth1_violation;
  std::optional<Witness> deeper_violation;
  CrossCheckStatus status = CrossCheckStatus::Inconsistent;
};

/// Compares classify_tuple against vanishing of every invariant on every
/// iterated-bracket value of depth <= depth.
CrossCheckReport cross_check(const LieAlgebra& L, const std::vector<Element>& tuple, std::size_t depth,
                             const ClosureOptions& options = {});

}  // namespace liealg
