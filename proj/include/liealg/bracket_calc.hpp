#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liealg/bracket_expr.hpp"
#include "liealg/errors.hpp"
#include "liealg/lie_algebra.hpp"

namespace liealg {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::size_t kDefaultLayerCap = 100'000;

enum class CountMode { Exact, Cumulative };

/// Number of expressions in n variables of depth exactly d, or of depth <= d.
/// Cumulative counts follow A_0 = 0, A_1 = n, A_{d+1} = A_d + A_d^2 - A_{d-1}^2.
BigInt count_exprs(std::size_t arity, std::size_t depth, CountMode mode);

/// Thrown when an enumeration would exceed its cap; carries the exact count.
class EnumerationCapExceeded : public CapExceededError {
 public:
  EnumerationCapExceeded(BigInt count, std::size_t cap);
  const BigInt& count() const noexcept { return count_; }

 private:
  BigInt count_;
};

/// Streams every expression of depth <= max_depth exactly once, in canonical
/// order: ascending depth, then by (left, right) position in emission order.
class ExprEnumerator {
 public:
  ExprEnumerator(std::size_t arity, std::size_t max_depth, std::size_t cap = kDefaultEnumerationCap);

  /// Next expression, or nullopt when the stream is exhausted.
  std::optional<BracketExpr> next();
  const BigInt& total() const noexcept { return total_; }

 private:
  std::size_t arity_;
  std::size_t max_depth_;
  BigInt total_;
  // Emitted expressions of depth < max_depth; the last layer is never stored.
  std::vector<BracketExpr> stored_;
  std::size_t depth_ = 1;
  std::size_t prev_end_ = 0;  // stored_ index where the current operand boundary layer starts
  std::size_t layer_end_ = 0;  // number of operands usable at this depth
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t leaf_ = 0;
};

/// Whole stream as a vector; convenient for small cases.
std::vector<BracketExpr> enumerate_exprs(std::size_t arity, std::size_t max_depth,
                                         std::size_t cap = kDefaultEnumerationCap);

struct ClosureEntry {
  Element value;
  BracketExpr witness;
};

/// Distinct values of iterated brackets of a tuple, by the depth at which each
/// value first occurs. layers[k] holds depth k + 1.
struct ValueClosure {
  std::size_t max_depth = 0;
  std::vector<std::vector<ClosureEntry>> layers;

  std::size_t value_count() const;
};

/// Thrown when a closure layer grows beyond the cap; carries what was built so far.
class LayerCapExceeded : public CapExceededError {
 public:
  LayerCapExceeded(ValueClosure partial, std::size_t depth, std::size_t cap);
  const ValueClosure& partial() const noexcept { return partial_; }
  std::size_t depth() const noexcept { return depth_; }

 private:
  ValueClosure partial_;
  std::size_t depth_;
};

struct ClosureOptions {
  std::size_t layer_cap = kDefaultLayerCap;
};

/// Layer d holds every value attainable at depth exactly d and not earlier,
/// formed by bracketing ordered pairs of recorded nonzero values with
/// max depth d - 1, in canonical pair order. Zero is recorded once and never
/// used as an operand.
ValueClosure value_closure(const LieAlgebra& L, const std::vector<Element>& tuple, std::size_t max_depth,
                           const ClosureOptions& options = {});

struct Witness {
  BracketExpr expr;
  Element value;
};

/// First recorded closure value, in canonical order, whose adjoint is not
/// nilpotent. Values of depth below `min_depth` are skipped.
std::optional<Witness> find_non_nilpotent_witness(const LieAlgebra& L, const std::vector<Element>& tuple,
                                                  std::size_t max_depth, const ClosureOptions& options = {},
                                                  std::size_t min_depth = 1);

struct VeryNilpotentVerdict {
  bool is_basis = false;
  bool algebra_nilpotent = false;
  /// Exact answer: a basis is very nilpotent iff the algebra is nilpotent.
  bool theorem_verdict = false;
  std::size_t check_depth = 0;
  /// Search evidence; a witness refutes very-nilpotency outright.
  std::optional<Witness> witness;
};

VeryNilpotentVerdict is_very_nilpotent_basis(const LieAlgebra& L, const std::vector<Element>& tuple,
                                             std::size_t check_depth, const ClosureOptions& options = {});

}  // namespace liealg
