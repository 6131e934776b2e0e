#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "liealg/lie_algebra.hpp"

namespace liealg {

/// An element of the iterated-bracket grammar in n variables y1..yn:
/// either a projection onto y_i or the bracket of two such expressions.
///
/// Depth follows dep(y_i) = 1, dep([f, g]) = max(dep f, dep g) + 1.
/// Subtrees are shared, so copies and node construction are O(1).
class BracketExpr {
 public:
  /// y_index, 1 <= index <= arity.
  static BracketExpr leaf(std::size_t arity, std::size_t index);
  /// [left, right]; both sides must have the same arity.
  static BracketExpr node(const BracketExpr& left, const BracketExpr& right);
  /// Parses the text form, e.g. "[[y1,y2],y2]". Whitespace is not allowed.
  static BracketExpr parse(std::string_view text, std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t depth() const noexcept;
  bool is_leaf() const noexcept;
  /// 1-based variable index; only meaningful for leaves.
  std::size_t index() const noexcept;
  BracketExpr left() const;
  BracketExpr right() const;

  std::string to_string() const;

  friend bool operator==(const BracketExpr& a, const BracketExpr& b);

 private:
  struct Node;
  BracketExpr(std::size_t arity, std::shared_ptr<const Node> node)
      : arity_(arity), node_(std::move(node)) {}

  std::size_t arity_;
  std::shared_ptr<const Node> node_;
};

inline std::size_t depth(const BracketExpr& e) { return e.depth(); }

/// f(y_1, ..., y_n) evaluated with the algebra bracket.
Element eval_expr(const LieAlgebra& L, const BracketExpr& e, std::span<const Element> tuple);

}  // namespace liealg
