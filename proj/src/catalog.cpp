#include "liealg/catalog.hpp"

#include <map>
#include <optional>

#include "liealg/errors.hpp"

namespace liealg {
namespace {

constexpr std::size_t kMaxCatalogDim = 100;

// A traceless matrix basis element: either E_ij (i != j) or H_i.
struct MatrixBasisElement {
  bool cartan;
  std::size_t i;
  std::size_t j;
  std::string label;
};

std::vector<MatrixBasisElement> sl_basis(std::size_t n, bool with_cartan, bool with_lower) {
  std::vector<MatrixBasisElement> out;
  const bool sl2_labels = (n == 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back({false, i, j,
                     sl2_labels ? "e" : "E" + std::to_string(i + 1) + std::to_string(j + 1)});
  if (with_cartan) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      out.push_back({true, i, i, sl2_labels ? "h" : "H" + std::to_string(i + 1)});
  }
  if (with_lower) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        out.push_back({false, j, i,
                       sl2_labels ? "f" : "E" + std::to_string(j + 1) + std::to_string(i + 1)});
  }
  return out;
}

using Dense = std::vector<Rational>;

Dense to_dense(const MatrixBasisElement& b, std::size_t n) {
  Dense m(n * n);
  if (b.cartan) {
    m[b.i * n + b.i] = 1;
    m[(b.i + 1) * n + b.i + 1] = -1;
  } else {
    m[b.i * n + b.j] = 1;
  }
  return m;
}

Dense commutator(const Dense& a, const Dense& b, std::size_t n) {
  Dense c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i * n + k]) == 0 && sgn(b[i * n + k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        c[i * n + j] += a[i * n + k] * b[k * n + j] - b[i * n + k] * a[k * n + j];
      }
    }
  return c;
}

LieAlgebra matrix_algebra(std::string name, std::size_t n, bool with_cartan, bool with_lower) {
  const auto basis = sl_basis(n, with_cartan, with_lower);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> root_index;
  std::vector<std::optional<std::size_t>> cartan_index(n);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].cartan) {
      cartan_index[basis[a].i] = a;
    } else {
      root_index[{basis[a].i, basis[a].j}] = a;
    }
  }
  std::vector<Dense> dense;
  for (const auto& b : basis) dense.push_back(to_dense(b, n));

  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const Dense c = commutator(dense[a], dense[b], n);
      std::map<std::size_t, Rational> coeffs;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || sgn(c[i * n + j]) == 0) continue;
          coeffs[root_index.at({i, j})] += c[i * n + j];
        }
      // Diagonal d = sum_k c_k H_k with c_k = d_0 + ... + d_k.
      Rational running = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        running += c[i * n + i];
        if (sgn(running) != 0) coeffs[*cartan_index[i]] += running;
      }
      BracketEntry e{a, b, {}};
      for (const auto& [k, v] : coeffs) {
        if (sgn(v) != 0) e.terms.push_back({k, v});
      }
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
  }
  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(b.label);
  return LieAlgebra(std::move(name), std::move(labels), std::move(entries));
}

void check_dim(std::size_t dim) {
  if (dim > kMaxCatalogDim) {
    throw InputError("catalog algebra of dimension " + std::to_string(dim) + " exceeds the limit of " +
                     std::to_string(kMaxCatalogDim));
  }
}

}  // namespace

const std::vector<std::string>& catalog_families() {
  static const std::vector<std::string> families{"sl", "borel_sl", "strictly_upper", "heisenberg",
                                                 "abelian"};
  return families;
}

LieAlgebra catalog(std::string_view family, std::size_t param) {
  const std::string suffix = "(" + std::to_string(param) + ")";
  if (family == "sl" || family == "borel_sl" || family == "strictly_upper") {
    if (param < 2) throw InputError(std::string(family) + " requires n >= 2");
    if (param > kMaxCatalogDim) check_dim(param);
    const std::size_t n = param;
    const std::size_t roots = n * (n - 1) / 2;
    if (family == "sl") {
      check_dim(n * n - 1);
      return matrix_algebra("sl" + suffix, n, true, true);
    }
    if (family == "borel_sl") {
      check_dim(roots + n - 1);
      return matrix_algebra("borel_sl" + suffix, n, true, false);
    }
    check_dim(roots);
    return matrix_algebra("strictly_upper" + suffix, n, false, false);
  }
  if (family == "heisenberg") {
    if (param < 3 || param % 2 == 0) throw InputError("heisenberg requires an odd dimension >= 3");
    check_dim(param);
    const std::size_t k = (param - 1) / 2;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(k == 1 ? "x" : "x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < k; ++i) labels.push_back(k == 1 ? "y" : "y" + std::to_string(i + 1));
    labels.emplace_back("z");
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < k; ++i) entries.push_back({i, k + i, {{2 * k, Rational(1)}}});
    return LieAlgebra("heisenberg" + suffix, std::move(labels), std::move(entries));
  }
  if (family == "abelian") {
    if (param < 1) throw InputError("abelian requires n >= 1");
    check_dim(param);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < param; ++i) labels.push_back("a" + std::to_string(i + 1));
    return LieAlgebra("abelian" + suffix, std::move(labels), {});
  }
  throw InputError("unknown catalog family \"" + std::string(family) + "\"");
}

std::size_t sl_root_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n || i == j) throw InputError("sl_root_index: invalid position");
  const std::size_t roots = n * (n - 1) / 2;
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  // row-major position of (lo, hi) among strictly upper entries
  const std::size_t pos = lo * n - lo * (lo + 1) / 2 + (hi - lo - 1);
  return i < j ? pos : roots + (n - 1) + pos;
}

std::size_t sl_cartan_index(std::size_t n, std::size_t i) {
  if (i + 1 >= n) throw InputError("sl_cartan_index: invalid index");
  return n * (n - 1) / 2 + i;
}

}  // namespace liealg
