#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "liealg/json_io.hpp"
#include "liealg/rational.hpp"

namespace fs = std::filesystem;
using liealg::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Workdir {
 public:
  Workdir() {
    dir_ = fs::temp_directory_path() / ("liealg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Workdir() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  fs::path dir_;
};

liealg::io::Json json(const std::string& text) { return liealg::io::Json::parse(text); }

const char* kEF = R"({"elements": [{"coords": ["1", "0", "0"]}, {"coords": ["0", "0", "1"]}]})";

}  // namespace

TEST_CASE("catalog then validate") {
  Workdir w;
  const auto c = call({"catalog", "sl", "3", "--out", w.path("sl3.json")});
  CHECK(c.code == 0);
  const auto v = call({"validate", w.path("sl3.json")});
  CHECK(v.code == 0);
  CHECK(v.out.find("\"jacobi\": \"ok\"") != std::string::npos);
  const auto t = call({"validate", "--algebra", w.path("sl3.json"), "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("jacobi: ok") != std::string::npos);
}

TEST_CASE("catalog output re-serializes to identical bytes") {
  Workdir w;
  for (const auto& [fam, p] : std::vector<std::pair<std::string, std::string>>{
           {"sl", "2"}, {"sl", "4"}, {"borel_sl", "3"}, {"heisenberg", "5"}, {"abelian", "2"}}) {
    REQUIRE(call({"catalog", fam, p, "--out", w.path("a.json")}).code == 0);
    const std::string bytes = w.read("a.json");
    const auto L = liealg::io::algebra_from_json(json(bytes));
    CHECK(liealg::io::to_json(L).dump(2) + "\n" == bytes);
    const auto stdout_form = call({"catalog", fam, p});
    CHECK(stdout_form.out == bytes);
  }
}

TEST_CASE("classify the (e, f) pair of sl2") {
  Workdir w;
  call({"catalog", "sl", "2", "--out", w.path("sl2.json")});
  const auto ef = w.write("ef.json", kEF);
  const auto r = call({"classify", "--algebra", w.path("sl2.json"), "--tuple", ef, "--witness-depth", "4"});
  CHECK(r.code == 0);
  const auto j = json(r.out);
  CHECK(j["verdict"] == "neither");
  CHECK(j["evidence"]["witness"]["expr"] == "[y1,y2]");
  CHECK(j["k_dim"] == 3);
}

TEST_CASE("count-brackets at depth 9 exceeds 2^256") {
  const auto r = call({"count-brackets", "--arity", "2", "--depth", "9", "--exact"});
  CHECK(r.code == 0);
  const liealg::BigInt count(json(r.out)["count"].get<std::string>());
  liealg::BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 2, 256);
  CHECK(count > bound);
  const auto cum = call({"count-brackets", "--arity", "2", "--depth", "2", "--cumulative", "--format", "text"});
  CHECK(cum.out.find("count: 6") != std::string::npos);
  CHECK(call({"count-brackets", "--arity", "2", "--depth", "2", "--cumulative", "--exact"}).code == 2);
}

TEST_CASE("every verb runs and is deterministic") {
  Workdir w;
  call({"catalog", "sl", "2", "--out", w.path("sl2.json")});
  call({"catalog", "sl", "3", "--out", w.path("sl3.json")});
  const auto ef = w.write("ef.json", kEF);
  const auto basis = w.write("basis.json", R"({"elements": [{"coords": ["1", "0", "0"]}, {"coords": ["0", "0", "1"]},
                                                {"coords": ["-1", "1", "1"]}]})");
  const auto e = w.write("e.json", R"({"coords": ["1", "0", "0"]})");
  const auto h = w.write("h.json", R"({"coords": ["0", "1", "0"]})");
  const std::string sl2 = w.path("sl2.json");
  const std::vector<std::vector<std::string>> commands{
      {"validate", sl2},
      {"series", "--algebra", sl2, "--kind", "derived"},
      {"series", "--algebra", w.path("sl3.json")},
      {"classify", "--algebra", sl2, "--tuple", ef},
      {"witness", "--algebra", sl2, "--tuple", ef, "--max-depth", "3"},
      {"very-nilpotent", "--algebra", sl2, "--tuple", basis, "--check-depth", "3"},
      {"jm", "--algebra", sl2, "--element", e},
      {"grading", "--algebra", sl2, "--h", h},
      {"refute-engel", "--algebra", sl2, "--basis", basis},
      {"count-brackets", "--arity", "3", "--depth", "4"},
      {"gen-export", "--algebra", sl2, "--arity", "1", "--min-depth", "1", "--max-depth", "2"},
      {"cross-check", "--algebra", sl2, "--tuple", ef, "--depth", "3"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    const auto a = call(cmd);
    CHECK(a.code == 0);
    CHECK(a.err.empty());
    CHECK_NOTHROW(json(a.out));
    CHECK(call(cmd).out == a.out);
    auto text_cmd = cmd;
    text_cmd.insert(text_cmd.end(), {"--format", "text"});
    const auto t = call(text_cmd);
    CHECK(t.code == 0);
    CHECK_FALSE(t.out.empty());
  }
}

TEST_CASE("verb outputs carry the expected results") {
  Workdir w;
  call({"catalog", "sl", "2", "--out", w.path("sl2.json")});
  const std::string sl2 = w.path("sl2.json");
  const auto basis = w.write("basis.json", R"({"elements": [{"coords": ["1", "0", "0"]}, {"coords": ["0", "0", "1"]},
                                                {"coords": ["-1", "1", "1"]}]})");
  const auto e = w.write("e.json", R"({"coords": ["1", "0", "0"]})");
  const auto h = w.write("h.json", R"({"coords": ["0", "1", "0"]})");

  const auto jm = json(call({"jm", "--algebra", sl2, "--element", e}).out);
  CHECK(jm["h"] == json(R"(["0", "1", "0"])"));
  const auto gr = json(call({"grading", "--algebra", sl2, "--h", h}).out);
  CHECK(gr["highest_weight"] == 2);
  CHECK(gr["layers"].size() == 3);
  const auto ref = json(call({"refute-engel", "--algebra", sl2, "--basis", basis}).out);
  CHECK(ref["outcome"]["kind"] == "direct_witness");
  CHECK(ref["outcome"]["expr"] == "[y1,y2]");
  const auto vn = json(call({"very-nilpotent", "--algebra", sl2, "--tuple", basis, "--check-depth", "2"}).out);
  CHECK(vn["very_nilpotent"] == false);
  const auto ser = json(call({"series", "--algebra", sl2, "--kind", "lower"}).out);
  CHECK(ser["dims"] == json("[3, 3]"));
  const auto gen = json(call({"gen-export", "--algebra", sl2, "--arity", "1", "--min-depth", "1", "--max-depth", "1"}).out);
  REQUIRE(gen["generators"].size() == 1);
  CHECK(gen["generators"][0]["text"] == "-4*y1_e*y1_f - 4*y1_h^2");
  CHECK(gen["generators"][0]["terms"][0]["exp"] == json("[1, 0, 1]"));
  CHECK(gen["generators"][0]["terms"][0]["coeff"] == "-4");
}

TEST_CASE("malformed input exits with 2") {
  Workdir w;
  call({"catalog", "sl", "2", "--out", w.path("sl2.json")});
  const std::string sl2 = w.path("sl2.json");
  const auto bad_key = w.write("k.json", R"({"elements": [], "extra": 1})");
  const auto bad_rat = w.write("r.json", R"({"elements": [{"coords": ["2/4", "0", "0"]}]})");
  const auto bad_len = w.write("l.json", R"({"elements": [{"coords": ["1", "0"]}]})");
  const auto bad_json = w.write("j.json", "{");
  const auto broken = w.write("broken.json", R"({"name": "bad", "dim": 3, "basis": ["e", "h", "f"], "brackets": [
      {"i": 0, "j": 1, "coeffs": {"0": "-2"}}, {"i": 0, "j": 2, "coeffs": {"0": "1"}}, {"i": 1, "j": 2, "coeffs": {"2": "-2"}}]})");
  const auto ef = w.write("ef.json", kEF);
  for (const auto& t : {bad_key, bad_rat, bad_len, bad_json}) {
    const auto r = call({"classify", "--algebra", sl2, "--tuple", t});
    CHECK(r.code == 2);
    CHECK(r.err.find(t) != std::string::npos);
  }
  CHECK(call({"classify", "--algebra", w.path("missing.json"), "--tuple", ef}).code == 2);
  CHECK(call({"classify", "--algebra", broken, "--tuple", ef}).code == 2);
  const auto v = call({"validate", broken});
  CHECK(v.code == 0);
  CHECK(json(v.out)["jacobi"] == "failed");
  CHECK(call({"catalog", "so", "3"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"series", "--algebra", sl2, "--kind", "upper"}).code == 2);
}

TEST_CASE("precondition violations and exceeded caps exit with 3") {
  Workdir w;
  call({"catalog", "heisenberg", "3", "--out", w.path("h3.json")});
  call({"catalog", "sl", "2", "--out", w.path("sl2.json")});
  call({"catalog", "sl", "3", "--out", w.path("sl3.json")});
  const auto x = w.write("x.json", R"({"elements": [{"coords": ["1", "0", "0"]}]})");
  const auto h = w.write("h.json", R"({"coords": ["0", "1", "0"]})");
  const auto r = call({"classify", "--algebra", w.path("h3.json"), "--tuple", x});
  CHECK(r.code == 3);
  CHECK_FALSE(r.err.empty());
  CHECK(call({"jm", "--algebra", w.path("sl2.json"), "--element", h}).code == 3);
  CHECK(call({"gen-export", "--algebra", w.path("sl3.json"), "--arity", "2", "--min-depth", "1", "--max-depth", "1"}).code ==
        3);
  CHECK(call({"gen-export", "--algebra", w.path("sl2.json"), "--arity", "2", "--min-depth", "1", "--max-depth", "4",
              "--expr-cap", "100"})
            .code == 3);
  // E12, E23 in sl3: layer 2 holds 0, E13 and -E13
  const auto pair = w.write("n.json", R"({"elements": [{"coords": ["1", "0", "0", "0", "0", "0", "0", "0"]},
                                                {"coords": ["0", "0", "1", "0", "0", "0", "0", "0"]}]})");
  const auto capped = call({"witness", "--algebra", w.path("sl3.json"), "--tuple", pair, "--max-depth", "5", "--layer-cap", "2"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("cap") != std::string::npos);
  CHECK(call({"witness", "--algebra", w.path("sl3.json"), "--tuple", pair, "--max-depth", "5"}).code == 0);
}

TEST_CASE("help lists caps with their defaults") {
  const auto r = call({"classify", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--witness-depth") != std::string::npos);
  CHECK(r.out.find("[4]") != std::string::npos);
  CHECK(r.out.find("[100000]") != std::string::npos);
  const auto g = call({"gen-export", "--help"});
  CHECK(g.out.find("[10000000]") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}
