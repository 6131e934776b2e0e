#include "liealg/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "liealg/errors.hpp"

namespace liealg {

struct LieAlgebra::Table {
  std::string name;
  std::vector<std::string> labels;
  std::size_t dim = 0;
  // full[i * dim + j] = terms of [b_i, b_j] for all i, j
  std::vector<std::vector<StructureTerm>> full;
};

LieAlgebra::LieAlgebra() : LieAlgebra("zero", {}, {}) {}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       std::vector<BracketEntry> brackets) {
  auto t = std::make_shared<Table>();
  t->name = std::move(name);
  t->dim = basis_labels.size();
  t->labels = std::move(basis_labels);
  t->full.resize(t->dim * t->dim);

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& entry : brackets) {
    if (entry.i >= entry.j) {
      throw InputError("bracket entry (" + std::to_string(entry.i) + ", " +
                       std::to_string(entry.j) + ") must satisfy i < j");
    }
    if (entry.j >= t->dim) {
      throw InputError("bracket index " + std::to_string(entry.j) + " out of range");
    }
    if (!seen.emplace(entry.i, entry.j).second) {
      throw InputError("duplicate bracket entry (" + std::to_string(entry.i) + ", " +
                       std::to_string(entry.j) + ")");
    }
    std::vector<StructureTerm> terms;
    std::set<std::size_t> ks;
    for (auto& term : entry.terms) {
      if (term.k >= t->dim) throw InputError("structure constant index out of range");
      if (!ks.insert(term.k).second) throw InputError("duplicate structure constant index");
      if (sgn(term.coeff) != 0) terms.push_back(term);
    }
    std::sort(terms.begin(), terms.end(),
              [](const StructureTerm& a, const StructureTerm& b) { return a.k < b.k; });
    std::vector<StructureTerm> negated;
    negated.reserve(terms.size());
    for (const auto& term : terms) negated.push_back({term.k, -term.coeff});
    t->full[entry.i * t->dim + entry.j] = std::move(terms);
    t->full[entry.j * t->dim + entry.i] = std::move(negated);
  }
  table_ = std::move(t);
}

const std::string& LieAlgebra::name() const noexcept { return table_->name; }
std::size_t LieAlgebra::dim() const noexcept { return table_->dim; }
const std::vector<std::string>& LieAlgebra::basis_labels() const noexcept { return table_->labels; }

const std::vector<StructureTerm>& LieAlgebra::structure(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw InputError("basis index out of range");
  return table_->full[i * dim() + j];
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      const auto& terms = structure(i, j);
      if (!terms.empty()) out.push_back({i, j, terms});
    }
  }
  return out;
}

std::vector<JacobiDefect> validate_algebra(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<JacobiDefect> defects;
  std::vector<Element> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(L.basis_element(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Element sum = bracket(L, basis[i], bracket(L, basis[j], basis[k]));
        sum += bracket(L, basis[j], bracket(L, basis[k], basis[i]));
        sum += bracket(L, basis[k], bracket(L, basis[i], basis[j]));
        if (!is_zero(sum)) defects.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  return defects;
}

Element bracket(const LieAlgebra& L, const Element& x, const Element& y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw InputError("element dimension does not match algebra");
  std::vector<std::size_t> nx;
  std::vector<std::size_t> ny;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) != 0) nx.push_back(i);
    if (sgn(y[i]) != 0) ny.push_back(i);
  }
  Element out(n);
  Rational xy;
  Rational t;
  for (auto i : nx) {
    for (auto j : ny) {
      if (i == j) continue;
      const auto& terms = L.structure(i, j);
      if (terms.empty()) continue;
      xy = x[i] * y[j];
      for (const auto& term : terms) {
        t = xy * term.coeff;
        out[term.k] += t;
      }
    }
  }
  return out;
}

Matrix ad_matrix(const LieAlgebra& L, const Element& x) {
  const std::size_t n = L.dim();
  if (x.size() != n) throw InputError("element dimension does not match algebra");
  Matrix m(n, n);
  Rational t;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& term : L.structure(i, j)) {
        t = x[i] * term.coeff;
        m(term.k, j) += t;
      }
    }
  }
  return m;
}

bool is_ad_nilpotent(const LieAlgebra& L, const Element& x) {
  return is_nilpotent_matrix(ad_matrix(L, x));
}

Matrix killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(L, L.basis_element(i)));
  Matrix k(n, n);
  Rational t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // trace(A B) = sum_{p,q} A(p,q) B(q,p)
      Rational tr = 0;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          if (sgn(ads[i](p, q)) == 0 || sgn(ads[j](q, p)) == 0) continue;
          t = ads[i](p, q) * ads[j](q, p);
          tr += t;
        }
      }
      k(i, j) = tr;
      k(j, i) = tr;
    }
  }
  return k;
}

bool is_semisimple(const LieAlgebra& L) { return rank(killing_form(L)) == L.dim(); }

Matrix exp_ad_nilpotent(const LieAlgebra& L, const Element& x) {
  const Matrix ad = ad_matrix(L, x);
  if (!is_nilpotent_matrix(ad)) throw PreconditionError("exp_ad_nilpotent: element is not ad-nilpotent");
  const std::size_t n = L.dim();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t m = 1; m <= n; ++m) {
    term = Rational(1, static_cast<unsigned long>(m)) * (ad * term);
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

LieAlgebra change_of_basis(const LieAlgebra& L, const Matrix& P) {
  const std::size_t n = L.dim();
  if (P.rows() != n || P.cols() != n) throw InputError("change_of_basis: matrix shape mismatch");
  const auto inv = inverse(P);
  if (!inv) throw PreconditionError("change_of_basis: matrix is singular");
  // New coordinates c of an ambient vector v satisfy c P = v, i.e. c = v P^{-1}.
  const Matrix inv_t = inv->transpose();
  std::vector<Element> rows = P.row_list();
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element c = inv_t * bracket(L, rows[i], rows[j]);
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(c[k]) != 0) e.terms.push_back({k, c[k]});
      }
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  LieAlgebra out(L.name() + "'", std::move(labels), std::move(entries));
  if (!validate_algebra(out).empty()) {
    throw std::logic_error("change_of_basis produced a table violating the Jacobi identity");
  }
  return out;
}

}  // namespace liealg
