#include "liealg/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "liealg/errors.hpp"

namespace liealg::io {
namespace {

void require_keys(const Json& j, const std::string& what, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw InputError(what + ": expected a JSON object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw InputError(what + ": missing key \"" + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key())) throw InputError(what + ": unknown key \"" + item.key() + "\"");
  }
}

std::size_t index_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned()) throw InputError(what + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::size_t index_from_key(const std::string& key, const std::string& what) {
  if (key.empty() || key.size() > 9 || (key.size() > 1 && key[0] == '0')) {
    throw InputError(what + ": invalid index key \"" + key + "\"");
  }
  std::size_t v = 0;
  for (char c : key) {
    if (c < '0' || c > '9') throw InputError(what + ": invalid index key \"" + key + "\"");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("rational must be a string \"p\" or \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t expected_dim) {
  if (!j.is_array()) throw InputError("coordinates must be an array");
  if (j.size() != expected_dim) {
    throw InputError("expected " + std::to_string(expected_dim) + " coordinates, got " + std::to_string(j.size()));
  }
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Json to_json(const LieAlgebra& L) {
  Json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["basis"] = L.basis_labels();
  Json brackets = Json::array();
  for (const auto& e : L.brackets()) {
    Json coeffs = Json::object();
    for (const auto& t : e.terms) coeffs[std::to_string(t.k)] = rational_to_json(t.coeff);
    Json entry;
    entry["i"] = e.i;
    entry["j"] = e.j;
    entry["coeffs"] = std::move(coeffs);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  require_keys(j, "algebra", {"name", "dim", "basis", "brackets"});
  if (!j["name"].is_string()) throw InputError("algebra: \"name\" must be a string");
  const std::size_t dim = index_from_json(j["dim"], "algebra.dim");
  if (!j["basis"].is_array()) throw InputError("algebra: \"basis\" must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) throw InputError("algebra: basis labels must be strings");
    labels.push_back(b.get<std::string>());
  }
  if (labels.size() != dim) throw InputError("algebra: \"dim\" does not match the number of basis labels");
  if (!j["brackets"].is_array()) throw InputError("algebra: \"brackets\" must be an array");
  std::vector<BracketEntry> entries;
  for (const auto& b : j["brackets"]) {
    require_keys(b, "algebra.brackets[]", {"i", "j", "coeffs"});
    BracketEntry e{index_from_json(b["i"], "algebra.brackets[].i"), index_from_json(b["j"], "algebra.brackets[].j"), {}};
    if (!b["coeffs"].is_object()) throw InputError("algebra.brackets[].coeffs must be an object");
    for (const auto& item : b["coeffs"].items()) {
      e.terms.push_back({index_from_key(item.key(), "algebra.brackets[].coeffs"), rational_from_json(item.value())});
    }
    entries.push_back(std::move(e));
  }
  return LieAlgebra(j["name"].get<std::string>(), std::move(labels), std::move(entries));
}

Json element_to_json(const Element& x) {
  Json j;
  j["coords"] = vector_to_json(x);
  return j;
}

Element element_from_json(const Json& j, std::size_t dim) {
  require_keys(j, "element", {"coords"});
  return vector_from_json(j["coords"], dim);
}

Json tuple_to_json(const std::vector<Element>& tuple) {
  Json elements = Json::array();
  for (const auto& x : tuple) elements.push_back(element_to_json(x));
  Json j;
  j["elements"] = std::move(elements);
  return j;
}

std::vector<Element> tuple_from_json(const Json& j, std::size_t dim) {
  require_keys(j, "tuple", {"elements"});
  if (!j["elements"].is_array()) throw InputError("tuple: \"elements\" must be an array");
  std::vector<Element> out;
  for (const auto& e : j["elements"]) out.push_back(element_from_json(e, dim));
  return out;
}

Json to_json(const Subalgebra& k) {
  Json j;
  j["dim"] = k.dim();
  j["closed"] = k.closed();
  Json basis = Json::array();
  for (const auto& b : k.basis()) basis.push_back(vector_to_json(b));
  j["basis"] = std::move(basis);
  return j;
}

Json to_json(const std::vector<JacobiDefect>& defects, const LieAlgebra& L) {
  Json j;
  j["algebra"] = L.name();
  j["jacobi"] = defects.empty() ? "ok" : "failed";
  Json list = Json::array();
  for (const auto& d : defects) {
    Json entry;
    entry["triple"] = {d.i, d.j, d.k};
    entry["labels"] = {L.basis_labels()[d.i], L.basis_labels()[d.j], L.basis_labels()[d.k]};
    entry["defect"] = vector_to_json(d.defect);
    list.push_back(std::move(entry));
  }
  j["defects"] = std::move(list);
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["expr"] = w.expr.to_string();
  j["depth"] = w.expr.depth();
  j["value"] = vector_to_json(w.value);
  return j;
}

Json to_json(const VeryNilpotentVerdict& v) {
  Json j;
  j["is_basis"] = v.is_basis;
  j["algebra_nilpotent"] = v.algebra_nilpotent;
  j["very_nilpotent"] = v.theorem_verdict;
  j["check_depth"] = v.check_depth;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

Json to_json(const Sl2Triple& t) {
  Json j;
  j["y"] = vector_to_json(t.y);
  j["h"] = vector_to_json(t.h);
  j["f"] = vector_to_json(t.f);
  return j;
}

Json to_json(const Grading& g) {
  Json j;
  j["h"] = vector_to_json(g.h());
  Json layers = Json::array();
  for (long w : g.weights()) {
    Json layer;
    layer["weight"] = w;
    layer["dim"] = g.layer_dim(w);
    Json basis = Json::array();
    for (const auto& b : g.layer(w).basis()) basis.push_back(vector_to_json(b));
    layer["basis"] = std::move(basis);
    layers.push_back(std::move(layer));
  }
  j["layers"] = std::move(layers);
  j["highest_weight"] = g.weights().empty() ? Json(nullptr) : Json(g.weights().back());
  return j;
}

Json to_json(const DescentStep& s) {
  Json j;
  j["triple"] = to_json(s.triple);
  j["top_weight"] = s.top_weight;
  Json z = Json::array();
  for (const auto& v : s.z) z.push_back(vector_to_json(v));
  j["z"] = std::move(z);
  Json y_low = Json::array();
  for (const auto& v : s.y_low) y_low.push_back(vector_to_json(v));
  j["y_low"] = std::move(y_low);
  j["projection_identity_holds"] = s.projection_identity_holds;
  j["k"] = to_json(s.k);
  Json extracted = Json::array();
  for (const auto& [a, b] : s.extracted) extracted.push_back({a, b});
  j["extracted"] = std::move(extracted);
  Json bad = Json::array();
  for (const auto& [a, b] : s.non_nilpotent_x) bad.push_back({a, b});
  j["non_nilpotent_x"] = std::move(bad);
  return j;
}

Json to_json(const RefutationReport& r) {
  Json j;
  Json trace = Json::array();
  for (const auto& step : r.trace) {
    Json s = to_json(step.descent);
    s["level"] = step.level;
    trace.push_back(std::move(s));
  }
  j["trace"] = std::move(trace);
  Json outcome;
  if (const auto* w = std::get_if<DirectWitness>(&r.outcome)) {
    outcome["kind"] = "direct_witness";
    outcome["expr"] = w->expr.to_string();
    outcome["depth"] = w->expr.depth();
    outcome["value"] = vector_to_json(w->value);
  } else {
    const auto& c = std::get<StructuralContradiction>(r.outcome);
    outcome["kind"] = "structural_contradiction";
    outcome["level"] = c.level;
    outcome["central"] = c.central;
    outcome["element"] = vector_to_json(c.element);
  }
  j["outcome"] = std::move(outcome);
  return j;
}

Json to_json(const ClassifyReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["k_dim"] = r.k.sub.dim();
  Json basis = Json::array();
  for (std::size_t i = 0; i < r.k.sub.dim(); ++i) {
    Json b;
    b["expr"] = r.k.provenance[i].to_string();
    b["coords"] = vector_to_json(r.k.sub.basis()[i]);
    basis.push_back(std::move(b));
  }
  j["k_basis"] = std::move(basis);
  Json evidence;
  evidence["derived_dims"] = r.derived_dims;
  switch (r.verdict) {
    case Verdict::CommonNilradical:
      evidence["nilpotency_class"] = r.nilpotency_class ? Json(*r.nilpotency_class) : Json(nullptr);
      break;
    case Verdict::CommonBorelOnly:
      evidence["non_nilpotent_entry"] =
          r.non_nilpotent_entry ? Json("y" + std::to_string(*r.non_nilpotent_entry + 1)) : Json(nullptr);
      break;
    case Verdict::Neither:
      evidence["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
      evidence["witness_depth_cap"] = r.witness_depth_cap;
      evidence["witness_search_truncated"] = r.witness_search_truncated;
      break;
  }
  j["evidence"] = std::move(evidence);
  return j;
}

Json to_json(const CrossCheckReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["depth"] = r.depth;
  j["values_checked"] = r.values_checked;
  j["depth1_all_vanish"] = r.depth1_all_vanish;
  j["deeper_all_vanish"] = r.deeper_all_vanish;
  j["depth1_violation"] = r.depth1_violation ? to_json(*r.depth1_violation) : Json(nullptr);
  j["deeper_violation"] = r.deeper_violation ? to_json(*r.deeper_violation) : Json(nullptr);
  j["status"] = to_string(r.status);
  return j;
}

Json to_json(const MultiPoly& p, const std::vector<std::string>& vars) {
  Json j;
  j["vars"] = vars;
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json t;
    t["exp"] = it->first;
    t["coeff"] = rational_to_json(it->second);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const SymbolicGenerators& g) {
  Json j;
  j["vars"] = g.vars;
  Json gens = Json::array();
  for (const auto& gen : g.generators) {
    Json e;
    e["expr"] = gen.expr.to_string();
    e["depth"] = gen.expr.depth();
    e["coeff_index"] = gen.coeff_index;
    Json poly = to_json(gen.poly, g.vars);
    e["terms"] = std::move(poly["terms"]);
    e["text"] = to_text(gen.poly, g.vars);
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  return j;
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

}  // namespace liealg::io
