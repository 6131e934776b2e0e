#pragma once

#include "liealg/catalog.hpp"
#include "liealg/lie_algebra.hpp"
#include "support/random.hpp"

namespace test_support {

using liealg::BracketEntry;
using liealg::Element;
using liealg::LieAlgebra;

/// sl2 typed in from [h,e] = 2e, [h,f] = -2f, [e,f] = h in the basis (e, h, f).
inline LieAlgebra sl2_by_hand() {
  return LieAlgebra("sl2", {"e", "h", "f"},
                    {BracketEntry{0, 1, {{0, -2}}}, BracketEntry{0, 2, {{1, 1}}}, BracketEntry{1, 2, {{2, -2}}}});
}

inline Element vec(std::initializer_list<long> xs) {
  Element v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Elementary matrix E_ij in catalog("sl", n) coordinates (0-based).
inline Element E(std::size_t n, std::size_t i, std::size_t j) {
  const LieAlgebra L = liealg::catalog("sl", n);
  return liealg::unit_vector(L.dim(), liealg::sl_root_index(n, i, j));
}

inline Element H(std::size_t n, std::size_t i) {
  const LieAlgebra L = liealg::catalog("sl", n);
  return liealg::unit_vector(L.dim(), liealg::sl_cartan_index(n, i));
}

/// Random element of sl(n) supported on the strictly upper root vectors.
inline Element random_strictly_upper(Rng& rng, std::size_t n) {
  Element x = liealg::zero_vector(n * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) x[liealg::sl_root_index(n, i, j)] = rng.rational();
  }
  return x;
}

/// Random element of sl(n) supported on the upper triangle (Cartan and upper roots).
inline Element random_upper(Rng& rng, std::size_t n) {
  Element x = random_strictly_upper(rng, n);
  for (std::size_t i = 0; i + 1 < n; ++i) x[liealg::sl_cartan_index(n, i)] = rng.rational();
  return x;
}

inline Element random_strictly_lower(Rng& rng, std::size_t n) {
  Element x = liealg::zero_vector(n * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) x[liealg::sl_root_index(n, i, j)] = rng.rational();
  }
  return x;
}

}  // namespace test_support
