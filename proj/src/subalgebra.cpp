#include "liealg/subalgebra.hpp"

#include <utility>

#include "liealg/errors.hpp"

namespace liealg {

Subalgebra::Subalgebra(LieAlgebra ambient, RowSpace space)
    : ambient_(std::move(ambient)), space_(std::move(space)) {
  const auto& rows = space_.basis();
  const std::size_t p = rows.size();
  std::vector<BracketEntry> entries;
  closed_ = true;
  for (std::size_t a = 0; a < p && closed_; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) {
      const auto coords = space_.coordinates(bracket(ambient_, rows[a], rows[b]));
      if (!coords) {
        closed_ = false;
        break;
      }
      BracketEntry e{a, b, {}};
      for (std::size_t k = 0; k < p; ++k) {
        if (sgn((*coords)[k]) != 0) e.terms.push_back({k, (*coords)[k]});
      }
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
  }
  if (closed_) {
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < p; ++a) labels.push_back("s" + std::to_string(a + 1));
    induced_.emplace(ambient_.name() + ".sub", std::move(labels), std::move(entries));
  }
}

Subalgebra Subalgebra::span(const LieAlgebra& ambient, const std::vector<Element>& generators) {
  RowSpace space(ambient.dim());
  for (const auto& g : generators) space.add(g);
  return Subalgebra(ambient, std::move(space));
}

Subalgebra Subalgebra::whole(const LieAlgebra& ambient) {
  std::vector<Element> basis;
  for (std::size_t i = 0; i < ambient.dim(); ++i) basis.push_back(ambient.basis_element(i));
  return span(ambient, basis);
}

Subalgebra Subalgebra::zero(const LieAlgebra& ambient) { return span(ambient, {}); }

const LieAlgebra& Subalgebra::algebra() const {
  if (!induced_) throw PreconditionError("subspace is not closed under the bracket");
  return *induced_;
}

bool Subalgebra::contains(const Subalgebra& other) const {
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

Element Subalgebra::lift(const Vector& coords) const {
  if (coords.size() != dim()) throw InputError("sub-basis coordinate length mismatch");
  Element out(ambient_.dim());
  for (std::size_t a = 0; a < coords.size(); ++a) axpy(out, coords[a], basis()[a]);
  return out;
}

bool Subalgebra::same_space(const Subalgebra& other) const {
  return dim() == other.dim() && contains(other);
}

namespace {

Subalgebra bracket_span(const LieAlgebra& L, const std::vector<Element>& left,
                        const std::vector<Element>& right) {
  RowSpace space(L.dim());
  std::vector<Element> gens;
  for (const auto& a : left) {
    for (const auto& b : right) {
      Element v = bracket(L, a, b);
      if (space.add(v)) gens.push_back(std::move(v));
    }
  }
  return Subalgebra::span(L, gens);
}

}  // namespace

std::vector<Subalgebra> series(const Subalgebra& k, SeriesKind kind) {
  if (!k.closed()) throw PreconditionError("series: subspace is not closed under the bracket");
  const LieAlgebra& L = k.ambient();
  std::vector<Subalgebra> terms{k};
  while (terms.back().dim() > 0) {
    const Subalgebra& current = terms.back();
    const auto& left = (kind == SeriesKind::LowerCentral) ? k.basis() : current.basis();
    Subalgebra next = bracket_span(L, left, current.basis());
    const bool stable = next.dim() == current.dim();
    terms.push_back(std::move(next));
    if (stable) break;
  }
  return terms;
}

std::vector<Subalgebra> series(const LieAlgebra& L, SeriesKind kind) {
  return series(Subalgebra::whole(L), kind);
}

bool is_nilpotent(const LieAlgebra& L) { return series(L, SeriesKind::LowerCentral).back().dim() == 0; }
bool is_solvable(const LieAlgebra& L) { return series(L, SeriesKind::Derived).back().dim() == 0; }
bool is_nilpotent(const Subalgebra& k) { return is_nilpotent(k.algebra()); }
bool is_solvable(const Subalgebra& k) { return is_solvable(k.algebra()); }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& L) {
  const auto terms = series(L, SeriesKind::LowerCentral);
  if (terms.back().dim() != 0) return std::nullopt;
  return terms.size() - 1;
}

Subalgebra derived_algebra(const Subalgebra& k) {
  const auto& b = k.basis();
  RowSpace space(k.ambient().dim());
  std::vector<Element> gens;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Element v = bracket(k.ambient(), b[i], b[j]);
      if (space.add(v)) gens.push_back(std::move(v));
    }
  }
  return Subalgebra::span(k.ambient(), gens);
}

Subalgebra derived_algebra(const LieAlgebra& L) { return derived_algebra(Subalgebra::whole(L)); }

Subalgebra center(const Subalgebra& k) {
  const LieAlgebra& K = k.algebra();
  const std::size_t p = K.dim();
  // sum_a c_a [s_a, s_b] = 0 for every b: one row per (b, output index).
  Matrix m(p * p, p);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      for (const auto& term : K.structure(a, b)) m(b * p + term.k, a) = term.coeff;
    }
  }
  std::vector<Element> gens;
  for (const auto& c : mat_kernel(m)) gens.push_back(k.lift(c));
  return Subalgebra::span(k.ambient(), gens);
}

Subalgebra center(const LieAlgebra& L) { return center(Subalgebra::whole(L)); }

Subalgebra radical(const LieAlgebra& L) {
  const Subalgebra derived = derived_algebra(L);
  const Matrix pairing = derived.basis_rows() * killing_form(L);
  return Subalgebra::span(L, mat_kernel(pairing));
}

Subalgebra centralizer(const LieAlgebra& L, const Element& h) {
  return Subalgebra::span(L, mat_kernel(ad_matrix(L, h)));
}

GeneratedSubalgebra generated_subalgebra(const LieAlgebra& L, const std::vector<Element>& tuple) {
  const std::size_t arity = tuple.size();
  RowSpace space(L.dim());
  std::vector<BracketExpr> provenance;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].size() != L.dim()) throw InputError("tuple element dimension does not match algebra");
    if (space.add(tuple[i])) provenance.push_back(BracketExpr::leaf(arity, i + 1));
  }
  // Each round brackets pairs involving at least one row added in the previous
  // round, so rows added in round r have depth at most r + 1.
  std::size_t frontier = 0;
  while (true) {
    const std::size_t end = space.dim();
    for (std::size_t a = 0; a < end; ++a) {
      for (std::size_t b = std::max(a + 1, frontier); b < end; ++b) {
        Element v = bracket(L, space.basis()[a], space.basis()[b]);
        if (space.add(v)) provenance.push_back(BracketExpr::node(provenance[a], provenance[b]));
      }
    }
    if (space.dim() == end) break;
    frontier = end;
  }
  return {Subalgebra::span(L, space.basis()), std::move(provenance)};
}

}  // namespace liealg
