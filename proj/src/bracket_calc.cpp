#include "liealg/bracket_calc.hpp"

#include <unordered_set>
#include <utility>

#include "liealg/subalgebra.hpp"

namespace liealg {

BigInt count_exprs(std::size_t arity, std::size_t depth, CountMode mode) {
  if (arity == 0 || depth == 0) throw InputError("count_exprs requires arity >= 1 and depth >= 1");
  BigInt prev = 0;  // A_{d-1}
  BigInt cur = static_cast<unsigned long>(arity);  // A_d
  for (std::size_t d = 1; d < depth; ++d) {
    BigInt next = cur + cur * cur - prev * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return mode == CountMode::Cumulative ? cur : BigInt(cur - prev);
}

EnumerationCapExceeded::EnumerationCapExceeded(BigInt count, std::size_t cap)
    : CapExceededError("enumeration of " + count.get_str() + " expressions exceeds the cap of " +
                       std::to_string(cap)),
      count_(std::move(count)) {}

ExprEnumerator::ExprEnumerator(std::size_t arity, std::size_t max_depth, std::size_t cap)
    : arity_(arity), max_depth_(max_depth), total_(count_exprs(arity, max_depth, CountMode::Cumulative)) {
  if (total_ > static_cast<unsigned long>(cap)) throw EnumerationCapExceeded(total_, cap);
}

std::optional<BracketExpr> ExprEnumerator::next() {
  if (depth_ == 1) {
    if (leaf_ < arity_) {
      BracketExpr e = BracketExpr::leaf(arity_, ++leaf_);
      if (max_depth_ > 1) stored_.push_back(e);
      return e;
    }
    if (max_depth_ < 2) return std::nullopt;
    depth_ = 2;
    prev_end_ = 0;
    layer_end_ = stored_.size();
    left_ = 0;
    right_ = 0;
  }
  while (true) {
    while (left_ < layer_end_) {
      // At least one operand must come from the previous depth layer.
      if (left_ < prev_end_ && right_ < prev_end_) right_ = prev_end_;
      if (right_ < layer_end_) {
        BracketExpr e = BracketExpr::node(stored_[left_], stored_[right_]);
        ++right_;
        if (depth_ < max_depth_) stored_.push_back(e);
        return e;
      }
      ++left_;
      right_ = 0;
    }
    if (depth_ >= max_depth_) return std::nullopt;
    ++depth_;
    prev_end_ = layer_end_;
    layer_end_ = stored_.size();
    left_ = 0;
    right_ = 0;
  }
}

std::vector<BracketExpr> enumerate_exprs(std::size_t arity, std::size_t max_depth, std::size_t cap) {
  ExprEnumerator it(arity, max_depth, cap);
  std::vector<BracketExpr> out;
  while (auto e = it.next()) out.push_back(std::move(*e));
  return out;
}

std::size_t ValueClosure::value_count() const {
  std::size_t n = 0;
  for (const auto& layer : layers) n += layer.size();
  return n;
}

LayerCapExceeded::LayerCapExceeded(ValueClosure partial, std::size_t depth, std::size_t cap)
    : CapExceededError("value closure layer at depth " + std::to_string(depth) + " exceeds the cap of " +
                       std::to_string(cap) + " values"),
      partial_(std::move(partial)),
      depth_(depth) {}

namespace {

// Builds the closure layer by layer, calling visit(entry, depth) for each new
// value in canonical order. Stops early when visit returns true.
template <class Visit>
ValueClosure build_closure(const LieAlgebra& L, const std::vector<Element>& tuple, std::size_t max_depth,
                           const ClosureOptions& options, Visit&& visit) {
  if (max_depth == 0) throw InputError("closure depth must be at least 1");
  for (const auto& y : tuple) {
    if (y.size() != L.dim()) throw InputError("tuple element dimension does not match algebra");
  }
  ValueClosure closure;
  closure.max_depth = max_depth;
  std::unordered_set<Vector, VectorHash> seen;
  // Nonzero recorded values as (layer, position), in recording order.
  std::vector<std::pair<std::size_t, std::size_t>> operands;

  auto value_at = [&closure, &operands](std::size_t op) -> const ClosureEntry& {
    return closure.layers[operands[op].first][operands[op].second];
  };
  auto finish = [&closure, max_depth]() {
    closure.layers.resize(max_depth);
    return std::move(closure);
  };

  const std::size_t arity = tuple.size();
  closure.layers.emplace_back();
  for (std::size_t i = 0; i < arity; ++i) {
    if (!seen.insert(tuple[i]).second) continue;
    auto& layer = closure.layers.back();
    layer.push_back({tuple[i], BracketExpr::leaf(arity, i + 1)});
    if (!is_zero(tuple[i])) operands.emplace_back(0, layer.size() - 1);
    if (visit(layer.back(), std::size_t{1})) return finish();
  }

  std::size_t boundary = 0;  // first operand recorded at the previous depth
  for (std::size_t depth = 2; depth <= max_depth; ++depth) {
    const std::size_t ops_end = operands.size();
    if (boundary == ops_end) break;  // no operand of depth - 1: every later layer is empty
    closure.layers.emplace_back();
    const std::size_t layer_index = closure.layers.size() - 1;
    for (std::size_t a = 0; a < ops_end; ++a) {
      for (std::size_t b = (a < boundary ? boundary : 0); b < ops_end; ++b) {
        Element v = bracket(L, value_at(a).value, value_at(b).value);
        if (seen.contains(v)) continue;
        BracketExpr expr = BracketExpr::node(value_at(a).witness, value_at(b).witness);
        seen.insert(v);
        auto& layer = closure.layers[layer_index];
        const bool nonzero = !is_zero(v);
        layer.push_back({std::move(v), std::move(expr)});
        if (nonzero) operands.emplace_back(layer_index, layer.size() - 1);
        if (layer.size() > options.layer_cap) {
          throw LayerCapExceeded(std::move(closure), depth, options.layer_cap);
        }
        if (visit(layer.back(), depth)) return finish();
      }
    }
    boundary = ops_end;
  }
  return finish();
}

}  // namespace

ValueClosure value_closure(const LieAlgebra& L, const std::vector<Element>& tuple, std::size_t max_depth,
                           const ClosureOptions& options) {
  return build_closure(L, tuple, max_depth, options,
                       [](const ClosureEntry&, std::size_t) { return false; });
}

std::optional<Witness> find_non_nilpotent_witness(const LieAlgebra& L, const std::vector<Element>& tuple,
                                                  std::size_t max_depth, const ClosureOptions& options,
                                                  std::size_t min_depth) {
  std::optional<Witness> found;
  build_closure(L, tuple, max_depth, options, [&](const ClosureEntry& entry, std::size_t depth) {
    if (depth < min_depth || is_ad_nilpotent(L, entry.value)) return false;
    found = Witness{entry.witness, entry.value};
    return true;
  });
  return found;
}

VeryNilpotentVerdict is_very_nilpotent_basis(const LieAlgebra& L, const std::vector<Element>& tuple,
                                             std::size_t check_depth, const ClosureOptions& options) {
  VeryNilpotentVerdict v;
  v.is_basis = tuple.size() == L.dim() && rank(tuple, L.dim()) == L.dim();
  v.algebra_nilpotent = is_nilpotent(L);
  v.theorem_verdict = v.is_basis && v.algebra_nilpotent;
  v.check_depth = check_depth;
  v.witness = find_non_nilpotent_witness(L, tuple, check_depth, options);
  return v;
}

}  // namespace liealg
