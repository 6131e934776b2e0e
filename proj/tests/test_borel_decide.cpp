#include <doctest.h>

#include "liealg/borel.hpp"
#include "liealg/catalog.hpp"
#include "liealg/errors.hpp"
#include "liealg/subalgebra.hpp"
#include "support/algebras.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace liealg;
using test_support::E;
using test_support::Rng;
using test_support::sl2_by_hand;
using test_support::vec;

namespace {

const Element e = vec({1, 0, 0});
const Element h = vec({0, 1, 0});
const Element f = vec({0, 0, 1});

std::vector<Element> conjugate(const Matrix& A, const std::vector<Element>& tuple) {
  std::vector<Element> out;
  for (const auto& y : tuple) out.push_back(A * y);
  return out;
}

}  // namespace

TEST_CASE("classify examples") {
  const LieAlgebra L = sl2_by_hand();
  const auto eh = classify_tuple(L, {e, h}, 4);
  CHECK(eh.verdict == Verdict::CommonBorelOnly);
  CHECK(eh.k.sub.dim() == 2);
  CHECK(eh.non_nilpotent_entry == 1u);

  const auto ef = classify_tuple(L, {e, f}, 4);
  CHECK(ef.verdict == Verdict::Neither);
  CHECK(ef.k.sub.dim() == 3);
  REQUIRE(ef.witness.has_value());
  CHECK(ef.witness->expr.to_string() == "[y1,y2]");
  CHECK(ef.witness->value == h);
  CHECK(ef.derived_dims == std::vector<std::size_t>{3, 3});

  const LieAlgebra L3 = catalog("sl", 3);
  const auto n = classify_tuple(L3, {E(3, 0, 1), E(3, 1, 2)}, 4);
  CHECK(n.verdict == Verdict::CommonNilradical);
  CHECK(n.nilpotency_class == 2u);
  CHECK(n.k.sub.dim() == 3);
}

TEST_CASE("classify preconditions") {
  CHECK_THROWS_AS(classify_tuple(catalog("heisenberg", 3), {vec({1, 0, 0})}, 2), PreconditionError);
  CHECK_THROWS_AS(classify_tuple(sl2_by_hand(), {vec({1, 0})}, 2), InputError);
}

TEST_CASE("verdict strings") {
  CHECK(to_string(Verdict::CommonNilradical) == "common_nilradical");
  CHECK(to_string(Verdict::CommonBorelOnly) == "common_borel");
  CHECK(to_string(Verdict::Neither) == "neither");
}

TEST_CASE("invariant values") {
  const LieAlgebra L = sl2_by_hand();
  CHECK(invariant_values(L, e) == std::vector<Rational>{0, 0, 0});
  CHECK(invariant_values(L, h) == std::vector<Rational>{0, -4, 0});
  CHECK(invariant_values(L, vec({0, 0, 0})) == std::vector<Rational>{0, 0, 0});
  Rng rng(51);
  const LieAlgebra L3 = catalog("sl", 3);
  for (int t = 0; t < 10; ++t) {
    const Element x = t % 2 == 0 ? rng.vector(8) : test_support::random_strictly_upper(rng, 3);
    const auto v = invariant_values(L3, x);
    bool all_zero = true;
    for (const auto& c : v) all_zero = all_zero && sgn(c) == 0;
    CHECK(all_zero == is_ad_nilpotent(L3, x));
  }
}

TEST_CASE("generator values") {
  const LieAlgebra L = sl2_by_hand();
  const BracketExpr y1 = BracketExpr::leaf(2, 1);
  const BracketExpr y12 = BracketExpr::node(y1, BracketExpr::leaf(2, 2));
  CHECK(generator_value(L, y12, {e, f}, 1) == -4);
  for (std::size_t i = 0; i < 3; ++i) CHECK(generator_value(L, y1, {e, h}, i) == 0);
  CHECK_THROWS_AS(generator_value(L, y1, {e, h}, 3), InputError);

  Rng rng(52);
  const LieAlgebra L3 = catalog("sl", 3);
  const std::vector<Element> tuple{test_support::random_strictly_upper(rng, 3),
                                   test_support::random_strictly_upper(rng, 3)};
  for (const auto& expr : enumerate_exprs(2, 3)) {
    for (std::size_t i = 0; i < 8; ++i) CHECK(generator_value(L3, expr, tuple, i) == 0);
  }
}

TEST_CASE("symbolic generators of sl2 in one variable") {
  const LieAlgebra L = sl2_by_hand();
  const auto g = symbolic_generators(L, 1, 1, 1);
  CHECK(g.vars == std::vector<std::string>{"y1_e", "y1_h", "y1_f"});
  REQUIRE(g.generators.size() == 1);
  CHECK(g.generators[0].expr.to_string() == "y1");
  CHECK(g.generators[0].coeff_index == 1);
  // -4 (x_h^2 + x_e x_f), typed in from det(tI - ad_x) = t^3 - 4 (x_h^2 + x_e x_f) t
  MultiPoly expected(3);
  expected.add_term({0, 2, 0}, -4);
  expected.add_term({1, 0, 1}, -4);
  CHECK(g.generators[0].poly == expected);
  CHECK(to_text(g.generators[0].poly, g.vars) == "-4*y1_e*y1_f - 4*y1_h^2");
}

TEST_CASE("symbolic generators evaluate like the cofactor characteristic polynomial") {
  const LieAlgebra L = sl2_by_hand();
  const auto g = symbolic_generators(L, 1, 1, 1);
  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const Element x = rng.vector(3);
    const Matrix ad = ad_matrix(L, x);
    for (long s = -2; s <= 2; ++s) {
      Rational value = Rational(s) * Rational(s) * Rational(s);
      for (const auto& gen : g.generators) {
        Rational power = 1;
        for (std::size_t i = 0; i < gen.coeff_index; ++i) power *= s;
        value += gen.poly.evaluate(x) * power;
      }
      CHECK(value == test_support::char_poly_at(ad, Rational(s)));
    }
  }
}

TEST_CASE("symbolic generators agree with generator values") {
  const LieAlgebra L = sl2_by_hand();
  const auto g = symbolic_generators(L, 2, 1, 3);
  CHECK(g.vars.size() == 6);
  Rng rng(54);
  for (int t = 0; t < 5; ++t) {
    const std::vector<Element> tuple{rng.vector(3), rng.vector(3)};
    Vector point = tuple[0];
    point.insert(point.end(), tuple[1].begin(), tuple[1].end());
    for (const auto& gen : g.generators) {
      CHECK(gen.poly.evaluate(point) == generator_value(L, gen.expr, tuple, gen.coeff_index));
    }
  }
  // Omitted pairs are identically zero.
  std::size_t listed = 0;
  for (const auto& expr : enumerate_exprs(2, 3)) {
    for (std::size_t i = 0; i < 3; ++i) {
      bool present = false;
      for (const auto& gen : g.generators) present = present || (gen.expr == expr && gen.coeff_index == i);
      if (present) {
        ++listed;
        continue;
      }
      const std::vector<Element> tuple{rng.vector(3), rng.vector(3)};
      CHECK(generator_value(L, expr, tuple, i) == 0);
    }
  }
  CHECK(listed == g.generators.size());
}

TEST_CASE("symbolic generators: trivial range and size gate") {
  const LieAlgebra L = sl2_by_hand();
  CHECK(symbolic_generators(L, 1, 2, 2).generators.empty());
  CHECK_THROWS_AS(symbolic_generators(catalog("sl", 3), 2, 1, 1), PreconditionError);
  CHECK_THROWS_AS(symbolic_generators(L, 1, 2, 1), InputError);
  CHECK_THROWS_AS(symbolic_generators(L, 4, 1, 4, 1000), EnumerationCapExceeded);
}

TEST_CASE("cross-check examples") {
  const LieAlgebra L = sl2_by_hand();
  const auto ef = cross_check(L, {e, f}, 2);
  CHECK(ef.verdict == Verdict::Neither);
  CHECK(ef.status == CrossCheckStatus::Consistent);
  CHECK_FALSE(ef.deeper_all_vanish);
  REQUIRE(ef.deeper_violation.has_value());
  CHECK(ef.deeper_violation->expr.to_string() == "[y1,y2]");

  const LieAlgebra L3 = catalog("sl", 3);
  Rng rng(55);
  const auto b = cross_check(L3, {test_support::random_upper(rng, 3), test_support::random_upper(rng, 3)}, 4);
  CHECK(b.verdict == Verdict::CommonBorelOnly);
  CHECK(b.status == CrossCheckStatus::Consistent);
  CHECK(b.deeper_all_vanish);
  CHECK_FALSE(b.depth1_all_vanish);

  const auto n = cross_check(L3, {test_support::random_strictly_upper(rng, 3),
                                  test_support::random_strictly_upper(rng, 3)}, 4);
  CHECK(n.verdict == Verdict::CommonNilradical);
  CHECK(n.status == CrossCheckStatus::Consistent);
  CHECK(n.depth1_all_vanish);
  CHECK(n.deeper_all_vanish);

  CHECK(to_string(CrossCheckStatus::WitnessBeyondCap) == "witness_beyond_cap");
}

TEST_CASE("classification is invariant under inner automorphisms and scaling") {
  const LieAlgebra L = catalog("sl", 3);
  Rng rng(56);
  for (int t = 0; t < 6; ++t) {
    std::vector<Element> tuple;
    if (t % 3 == 0) tuple = {test_support::random_strictly_upper(rng, 3), test_support::random_strictly_upper(rng, 3)};
    if (t % 3 == 1) tuple = {test_support::random_upper(rng, 3), test_support::random_upper(rng, 3)};
    if (t % 3 == 2) tuple = {rng.vector(8), rng.vector(8)};
    const Verdict v = classify_tuple(L, tuple, 3).verdict;
    for (int a = 0; a < 3; ++a) {
      const Element x = a % 2 == 0 ? test_support::random_strictly_lower(rng, 3)
                                   : test_support::random_strictly_upper(rng, 3);
      const Matrix A = exp_ad_nilpotent(L, x);
      CHECK(classify_tuple(L, conjugate(A, tuple), 3).verdict == v);
    }
    std::vector<Element> scaled;
    for (const auto& y : tuple) scaled.push_back(rng.nonzero_rational() * y);
    const auto rs = classify_tuple(L, scaled, 3);
    CHECK(rs.verdict == v);
    CHECK(rs.k.sub.same_space(classify_tuple(L, tuple, 3).k.sub));
  }
}

TEST_CASE("common nilradical verdicts have nilpotent combinations") {
  const LieAlgebra L = catalog("sl", 3);
  Rng rng(57);
  for (int t = 0; t < 10; ++t) {
    const Matrix A = exp_ad_nilpotent(L, test_support::random_strictly_lower(rng, 3));
    const auto r = classify_tuple(L, conjugate(A, {test_support::random_strictly_upper(rng, 3),
                                                   test_support::random_strictly_upper(rng, 3)}), 3);
    REQUIRE(r.verdict == Verdict::CommonNilradical);
    for (int c = 0; c < 20; ++c) {
      CHECK(is_ad_nilpotent(L, rng.combination(r.k.sub.basis(), 8)));
    }
    CHECK(is_nilpotent(r.k.sub));
  }
}

TEST_CASE("pairs inside the Borel never classify as neither") {
  const LieAlgebra L = catalog("sl", 3);
  Rng rng(58);
  for (int t = 0; t < 20; ++t) {
    const auto r = classify_tuple(L, {test_support::random_upper(rng, 3), test_support::random_upper(rng, 3)}, 3);
    CHECK(r.verdict != Verdict::Neither);
    CHECK(r.derived_dims.back() == 0);
    const auto n = classify_tuple(
        L, {test_support::random_strictly_upper(rng, 3), test_support::random_strictly_upper(rng, 3)}, 3);
    CHECK(n.verdict == Verdict::CommonNilradical);
  }
}
