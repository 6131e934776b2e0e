#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "liealg/borel.hpp"
#include "liealg/bracket_calc.hpp"
#include "liealg/catalog.hpp"
#include "liealg/errors.hpp"
#include "liealg/json_io.hpp"
#include "liealg/ss_structure.hpp"
#include "liealg/subalgebra.hpp"

namespace liealg::cli {
namespace {

using io::Json;

constexpr std::size_t kDefaultWitnessDepth = 4;
constexpr std::size_t kDefaultSearchDepth = 6;
constexpr std::size_t kDefaultCrossCheckDepth = 4;

LieAlgebra load_algebra(const std::string& path) {
  LieAlgebra L = io::algebra_from_json(io::read_file(path));
  const auto defects = validate_algebra(L);
  if (!defects.empty()) {
    const auto& d = defects.front();
    throw InputError(path + ": Jacobi identity fails on basis triple (" + std::to_string(d.i) + ", " +
                     std::to_string(d.j) + ", " + std::to_string(d.k) + ")");
  }
  return L;
}

std::vector<Element> load_tuple(const std::string& path, const LieAlgebra& L) {
  try {
    return io::tuple_from_json(io::read_file(path), L.dim());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Element load_element(const std::string& path, const LieAlgebra& L) {
  try {
    return io::element_from_json(io::read_file(path), L.dim());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (!is_scalar(x)) return false;
  }
  return true;
}

std::string flat_array_text(const Json& j) {
  std::string s = "(";
  bool first = true;
  for (const auto& x : j) {
    if (!first) s += ", ";
    s += scalar_text(x);
    first = false;
  }
  return s + ")";
}

// Indented "key: value" rendering of a report.
void render_text(const Json& j, std::ostream& out, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& item : j.items()) {
      const Json& v = item.value();
      if (is_scalar(v)) {
        out << pad << item.key() << ": " << scalar_text(v) << '\n';
      } else if (is_flat_array(v)) {
        out << pad << item.key() << ": " << flat_array_text(v) << '\n';
      } else if (v.empty()) {
        out << pad << item.key() << ": " << (v.is_array() ? "[]" : "{}") << '\n';
      } else {
        out << pad << item.key() << ":\n";
        render_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        out << pad << "- " << scalar_text(v) << '\n';
      } else if (is_flat_array(v)) {
        out << pad << "- " << flat_array_text(v) << '\n';
      } else {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

Json series_report(const LieAlgebra& L, SeriesKind kind) {
  const auto terms = series(L, kind);
  Json j;
  j["algebra"] = L.name();
  j["kind"] = kind == SeriesKind::LowerCentral ? "lower" : "derived";
  Json dims = Json::array();
  for (const auto& t : terms) dims.push_back(t.dim());
  j["dims"] = std::move(dims);
  j["reaches_zero"] = terms.back().dim() == 0;
  j["nilpotent"] = is_nilpotent(L);
  j["solvable"] = is_solvable(L);
  Json list = Json::array();
  for (const auto& t : terms) list.push_back(io::to_json(t));
  j["terms"] = std::move(list);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie algebra toolkit: iterated brackets, Borel classification, sl2-triples"};
  app.name("liealg");
  app.require_subcommand(1);

  std::string algebra_path;
  std::string tuple_path;
  std::string format = "json";
  std::size_t layer_cap = kDefaultLayerCap;
  std::size_t expr_cap = kDefaultEnumerationCap;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  };
  const auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
  };
  const auto add_tuple = [&](CLI::App* sub, const std::string& flag, const std::string& help) {
    sub->add_option(flag, tuple_path, help)->required();
  };
  const auto add_layer_cap = [&](CLI::App* sub) {
    sub->add_option("--layer-cap", layer_cap, "Maximum number of values per closure layer")->capture_default_str();
  };

  std::function<Json()> action;

  // validate
  auto* validate = app.add_subcommand("validate", "Check the Jacobi identity on every basis triple");
  validate->add_option("algebra,--algebra", algebra_path, "Algebra JSON file")->required();
  add_format(validate);
  validate->callback([&] {
    action = [&] {
      const LieAlgebra L = io::algebra_from_json(io::read_file(algebra_path));
      return io::to_json(validate_algebra(L), L);
    };
  });

  // catalog
  std::string family;
  std::size_t param = 0;
  std::string out_path;
  auto* cat = app.add_subcommand("catalog", "Emit a standard algebra (sl, borel_sl, strictly_upper, heisenberg, abelian)");
  cat->add_option("family", family, "Family name")->required();
  cat->add_option("param", param, "Size parameter (n, or dimension for heisenberg)")->required();
  cat->add_option("--out", out_path, "Write the algebra to this file instead of stdout");
  cat->callback([&] { action = [&] { return io::to_json(catalog(family, param)); }; });

  // series
  std::string kind = "lower";
  auto* ser = app.add_subcommand("series", "Lower central or derived series");
  add_algebra(ser);
  ser->add_option("--kind", kind, "lower or derived")->check(CLI::IsMember({"lower", "derived"}))->capture_default_str();
  add_format(ser);
  ser->callback([&] {
    action = [&] {
      return series_report(load_algebra(algebra_path), kind == "lower" ? SeriesKind::LowerCentral : SeriesKind::Derived);
    };
  });

  // classify
  std::size_t witness_depth = kDefaultWitnessDepth;
  auto* cls = app.add_subcommand("classify", "Common nilradical / common Borel / neither");
  add_algebra(cls);
  add_tuple(cls, "--tuple", "Tuple JSON file");
  cls->add_option("--witness-depth", witness_depth, "Depth cap of the non-nilpotent bracket search")
      ->capture_default_str();
  add_layer_cap(cls);
  add_format(cls);
  cls->callback([&] {
    action = [&] {
      const LieAlgebra L = load_algebra(algebra_path);
      return io::to_json(classify_tuple(L, load_tuple(tuple_path, L), witness_depth, {layer_cap}));
    };
  });

  // witness
  std::size_t max_depth = kDefaultSearchDepth;
  auto* wit = app.add_subcommand("witness", "First iterated bracket with a non-nilpotent value");
  add_algebra(wit);
  add_tuple(wit, "--tuple", "Tuple JSON file");
  wit->add_option("--max-depth", max_depth, "Depth cap of the search")->capture_default_str();
  add_layer_cap(wit);
  add_format(wit);
  wit->callback([&] {
    action = [&] {
      const LieAlgebra L = load_algebra(algebra_path);
      const auto w = find_non_nilpotent_witness(L, load_tuple(tuple_path, L), max_depth, {layer_cap});
      Json j;
      j["max_depth"] = max_depth;
      j["found"] = w.has_value();
      j["witness"] = w ? io::to_json(*w) : Json(nullptr);
      return j;
    };
  });

  // very-nilpotent
  std::size_t check_depth = kDefaultSearchDepth;
  auto* vn = app.add_subcommand("very-nilpotent", "Decide whether a basis is very nilpotent");
  add_algebra(vn);
  add_tuple(vn, "--tuple", "Basis as a tuple JSON file");
  vn->add_option("--check-depth", check_depth, "Depth cap of the corroborating search")->capture_default_str();
  add_layer_cap(vn);
  add_format(vn);
  vn->callback([&] {
    action = [&] {
      const LieAlgebra L = load_algebra(algebra_path);
      return io::to_json(is_very_nilpotent_basis(L, load_tuple(tuple_path, L), check_depth, {layer_cap}));
    };
  });

  // jm
  std::string element_path;
  auto* jm = app.add_subcommand("jm", "sl2-triple through a nilpotent element");
  add_algebra(jm);
  jm->add_option("--element", element_path, "Element JSON file")->required();
  add_format(jm);
  jm->callback([&] {
    action = [&] {
      const LieAlgebra L = load_algebra(algebra_path);
      return io::to_json(jacobson_morozov(L, load_element(element_path, L)));
    };
  });

  // grading
  auto* gr = app.add_subcommand("grading", "Eigenspace grading of ad_h");
  gr->set_help_flag("--help", "Print this help message and exit");
  add_algebra(gr);
  gr->add_option("--h", element_path, "Element JSON file")->required();
  add_format(gr);
  gr->callback([&] {
    action = [&] {
      const LieAlgebra L = load_algebra(algebra_path);
      return io::to_json(characteristic_grading(L, load_element(element_path, L)));
    };
  });

  // refute-engel
  auto* ref = app.add_subcommand("refute-engel", "Show a basis of a semisimple algebra is not very nilpotent");
  add_algebra(ref);
  add_tuple(ref, "--basis", "Basis as a tuple JSON file");
  add_layer_cap(ref);
  add_format(ref);
  ref->callback([&] {
    action = [&] {
      const LieAlgebra L = load_algebra(algebra_path);
      return io::to_json(engel_refuter(L, load_tuple(tuple_path, L), {layer_cap}));
    };
  });

  // count-brackets
  std::size_t arity = 2;
  std::size_t depth = 1;
  bool exact = false;
  bool cumulative = false;
  auto* cnt = app.add_subcommand("count-brackets", "Number of iterated-bracket expressions");
  cnt->add_option("--arity", arity, "Number of variables")->required();
  cnt->add_option("--depth", depth, "Depth")->required();
  auto* exact_flag = cnt->add_flag("--exact", exact, "Count expressions of depth exactly d (default)");
  cnt->add_flag("--cumulative", cumulative, "Count expressions of depth at most d")->excludes(exact_flag);
  add_format(cnt);
  cnt->callback([&] {
    action = [&] {
      const CountMode mode = cumulative ? CountMode::Cumulative : CountMode::Exact;
      Json j;
      j["arity"] = arity;
      j["depth"] = depth;
      j["mode"] = cumulative ? "cumulative" : "exact";
      j["count"] = count_exprs(arity, depth, mode).get_str();
      return j;
    };
  });

  // gen-export
  std::size_t min_depth = 1;
  std::size_t gen_max_depth = 1;
  auto* gen = app.add_subcommand("gen-export", "Expanded invariant polynomials of iterated brackets");
  add_algebra(gen);
  gen->add_option("--arity", arity, "Number of tuple entries")->required();
  gen->add_option("--min-depth", min_depth, "Smallest expression depth")->required();
  gen->add_option("--max-depth", gen_max_depth, "Largest expression depth")->required();
  gen->add_option("--expr-cap", expr_cap, "Maximum number of expressions enumerated")->capture_default_str();
  add_format(gen);
  gen->callback([&] {
    action = [&] {
      return io::to_json(symbolic_generators(load_algebra(algebra_path), arity, min_depth, gen_max_depth, expr_cap));
    };
  });

  // cross-check
  std::size_t cc_depth = kDefaultCrossCheckDepth;
  auto* cc = app.add_subcommand("cross-check", "Compare classify against invariant vanishing");
  add_algebra(cc);
  add_tuple(cc, "--tuple", "Tuple JSON file");
  cc->add_option("--depth", cc_depth, "Largest expression depth examined")->capture_default_str();
  add_layer_cap(cc);
  add_format(cc);
  cc->callback([&] {
    action = [&] {
      const LieAlgebra L = load_algebra(algebra_path);
      return io::to_json(cross_check(L, load_tuple(tuple_path, L), cc_depth, {layer_cap}));
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const Json result = action();
    if (!out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw InputError(out_path + ": cannot open for writing");
      file << result.dump(2) << '\n';
      return kExitOk;
    }
    if (format == "text") {
      render_text(result, out, 0);
    } else {
      out << result.dump(2) << '\n';
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

}  // namespace liealg::cli
