#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "liealg/lie_algebra.hpp"

namespace liealg {

/// Standard algebras by family name:
///   "sl" n             traceless n x n matrices; basis E_ij (i < j), H_i = E_ii - E_{i+1,i+1}, E_ji
///   "borel_sl" n       upper-triangular part of sl(n)
///   "strictly_upper" n nilradical of borel_sl(n)
///   "heisenberg" d     d = 2k + 1; [x_i, y_i] = z
///   "abelian" n
/// sl(2) uses the labels e, h, f. Throws InputError for unknown families,
/// invalid parameters, or dimension above 100.
LieAlgebra catalog(std::string_view family, std::size_t param);

const std::vector<std::string>& catalog_families();

/// Coordinates of the elementary matrix E_ij (0-based, i != j) in the
/// basis of catalog("sl", n), catalog("borel_sl", n) or catalog("strictly_upper", n).
std::size_t sl_root_index(std::size_t n, std::size_t i, std::size_t j);
/// Coordinates of H_i = E_ii - E_{i+1,i+1} in catalog("sl", n) or catalog("borel_sl", n).
std::size_t sl_cartan_index(std::size_t n, std::size_t i);

}  // namespace liealg
