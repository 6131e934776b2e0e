#include "liealg/bracket_expr.hpp"

#include <algorithm>

#include "liealg/errors.hpp"

namespace liealg {

struct BracketExpr::Node {
  std::size_t depth;
  std::size_t index;  // 0 for inner nodes
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

BracketExpr BracketExpr::leaf(std::size_t arity, std::size_t index) {
  if (index == 0 || index > arity) {
    throw InputError("leaf index y" + std::to_string(index) + " outside arity " + std::to_string(arity));
  }
  return BracketExpr(arity, std::make_shared<const Node>(Node{1, index, nullptr, nullptr}));
}

BracketExpr BracketExpr::node(const BracketExpr& left, const BracketExpr& right) {
  if (left.arity_ != right.arity_) throw InputError("bracket of expressions with different arity");
  const std::size_t d = std::max(left.depth(), right.depth()) + 1;
  return BracketExpr(left.arity_, std::make_shared<const Node>(Node{d, 0, left.node_, right.node_}));
}

std::size_t BracketExpr::depth() const noexcept { return node_->depth; }
bool BracketExpr::is_leaf() const noexcept { return node_->index != 0; }
std::size_t BracketExpr::index() const noexcept { return node_->index; }

BracketExpr BracketExpr::left() const {
  if (is_leaf()) throw InputError("leaf has no subexpressions");
  return BracketExpr(arity_, node_->left);
}

BracketExpr BracketExpr::right() const {
  if (is_leaf()) throw InputError("leaf has no subexpressions");
  return BracketExpr(arity_, node_->right);
}

namespace {

void append_text(const BracketExpr& e, std::string& out) {
  if (e.is_leaf()) {
    out += 'y';
    out += std::to_string(e.index());
    return;
  }
  out += '[';
  append_text(e.left(), out);
  out += ',';
  append_text(e.right(), out);
  out += ']';
}

bool same_tree(const BracketExpr& a, const BracketExpr& b) {
  if (a.depth() != b.depth() || a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.index() == b.index();
  return same_tree(a.left(), b.left()) && same_tree(a.right(), b.right());
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  BracketExpr parse_all() {
    BracketExpr e = parse_expr();
    if (pos_ != text_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse bracket expression \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  BracketExpr parse_expr() {
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      BracketExpr l = parse_expr();
      expect(',');
      BracketExpr r = parse_expr();
      expect(']');
      return BracketExpr::node(l, r);
    }
    expect('y');
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > arity_) fail("variable index exceeds arity");
      ++pos_;
    }
    if (pos_ == start) fail("missing variable index");
    return BracketExpr::leaf(arity_, value);
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

BracketExpr BracketExpr::parse(std::string_view text, std::size_t arity) {
  return Parser(text, arity).parse_all();
}

std::string BracketExpr::to_string() const {
  std::string out;
  append_text(*this, out);
  return out;
}

bool operator==(const BracketExpr& a, const BracketExpr& b) {
  return a.arity_ == b.arity_ && (a.node_ == b.node_ || same_tree(a, b));
}

Element eval_expr(const LieAlgebra& L, const BracketExpr& e, std::span<const Element> tuple) {
  if (tuple.size() != e.arity()) {
    throw InputError("expression arity " + std::to_string(e.arity()) + " does not match tuple length " +
                     std::to_string(tuple.size()));
  }
  if (e.is_leaf()) {
    const Element& y = tuple[e.index() - 1];
    if (y.size() != L.dim()) throw InputError("element dimension does not match algebra");
    return y;
  }
  return bracket(L, eval_expr(L, e.left(), tuple), eval_expr(L, e.right(), tuple));
}

}  // namespace liealg
