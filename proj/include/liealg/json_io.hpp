#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "liealg/borel.hpp"
#include "liealg/bracket_calc.hpp"
#include "liealg/lie_algebra.hpp"
#include "liealg/ss_structure.hpp"
#include "liealg/subalgebra.hpp"

namespace liealg::io {

using Json = nlohmann::ordered_json;

/// {"name", "dim", "basis", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}
Json to_json(const LieAlgebra& L);
/// Throws InputError on unknown keys, bad types, or inconsistent dimensions.
LieAlgebra algebra_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t expected_dim);
Json matrix_to_json(const Matrix& m);

/// {"coords": [...]}
Json element_to_json(const Element& x);
Element element_from_json(const Json& j, std::size_t dim);
/// {"elements": [{"coords": [...]}, ...]}
Json tuple_to_json(const std::vector<Element>& tuple);
std::vector<Element> tuple_from_json(const Json& j, std::size_t dim);

Json to_json(const Subalgebra& k);
Json to_json(const std::vector<JacobiDefect>& defects, const LieAlgebra& L);
Json to_json(const Witness& w);
Json to_json(const VeryNilpotentVerdict& v);
Json to_json(const Sl2Triple& t);
Json to_json(const Grading& g);
Json to_json(const DescentStep& s);
Json to_json(const RefutationReport& r);
Json to_json(const ClassifyReport& r);
Json to_json(const CrossCheckReport& r);
Json to_json(const MultiPoly& p, const std::vector<std::string>& vars);
Json to_json(const SymbolicGenerators& g);

/// Parses JSON text; syntax errors become InputError mentioning `source`.
Json parse(const std::string& text, const std::string& source);
Json read_file(const std::string& path);

}  // namespace liealg::io
