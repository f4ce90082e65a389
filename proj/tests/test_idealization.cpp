#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/idealization.hpp"

using namespace ivpoly;

namespace {

IdealElem el(const Rat& x, const std::vector<Rat>& m) {
  return IdealElem{x, ModuleElem{m}};
}

IdealPoly ip(const std::string& text) { return parse_ideal_poly(text).first; }

}  // namespace

TEST_CASE("pair arithmetic keeps the module square-zero") {
  ModuleSpec Z2 = ModuleSpec::free_zn(2);
  IdealElem a = el(Rat(2), {Rat(1), Rat(0)});
  IdealElem b = el(Rat(3), {Rat(0), Rat(1)});
  CHECK(ideal_mul(Z2, a, b) == el(Rat(6), {Rat(3), Rat(2)}));
  CHECK(ideal_add(Z2, a, b) == el(Rat(5), {Rat(1), Rat(1)}));
  // (0, m)(0, m') = 0
  IdealElem za = el(Rat(0), {Rat(4), Rat(7)});
  IdealElem zb = el(Rat(0), {Rat(-1), Rat(2)});
  CHECK(ideal_mul(Z2, za, zb) == el(Rat(0), {Rat(0), Rat(0)}));
}

TEST_CASE("module scalars act through the localization") {
  ModuleSpec Z4 = ModuleSpec::zmod(4);
  CHECK(module_add(Z4, ModuleElem{{Rat(2)}}, ModuleElem{{Rat(3)}}) ==
        ModuleElem{{Rat(1)}});
  // 1/3 acts as 3 mod 4.
  CHECK(module_scale(Z4, Rat(1, 3), ModuleElem{{Rat(2)}}) ==
        ModuleElem{{Rat(2)}});
  CHECK_THROWS_AS(module_scale(Z4, Rat(1, 2), ModuleElem{{Rat(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModuleSpec::zmod(0), std::invalid_argument);
}

TEST_CASE("evaluation follows the derivative rule, both paths") {
  ModuleSpec Z4 = ModuleSpec::zmod(4);
  IdealPoly F = ip("(X^2 ; X)");
  IdealElem z = el(Rat(3), {Rat(2)});
  // f(3) = 9, f'(3)*2 + h(3) = 15 = 3 mod 4.
  IdealElem want = el(Rat(9), {Rat(3)});
  CHECK(ideal_eval(Z4, F, z) == want);
  CHECK(ideal_eval_horner(Z4, F, z) == want);

  ModuleSpec Z1 = ModuleSpec::free_zn(1);
  IdealPoly G = ip("(C(X,2) ; 0)");
  IdealElem w = el(Rat(4), {Rat(1)});
  // C(4,2) = 6, C'(4,2) = 7/2.
  CHECK(ideal_eval(Z1, G, w) == el(Rat(6), {Rat(7, 2)}));
  CHECK(ideal_eval_horner(Z1, G, w) == ideal_eval(Z1, G, w));
}

TEST_CASE("coefficients come out as pairs") {
  IdealPoly F = ip("(X^2 ; 2*X, 1)");
  ModuleSpec Z2 = ModuleSpec::free_zn(2);
  CHECK(ideal_coefficient(Z2, F, 0) == el(Rat(0), {Rat(0), Rat(1)}));
  CHECK(ideal_coefficient(Z2, F, 1) == el(Rat(0), {Rat(2), Rat(0)}));
  CHECK(ideal_coefficient(Z2, F, 2) == el(Rat(1), {Rat(0), Rat(0)}));
}

TEST_CASE("membership over a torsion module ignores the derivative") {
  // Over Z/3 every module value is killed by 3, so C(X,2) needs only to be
  // integer-valued and 2-invertible, not to have an integral derivative.
  CHECK(in_int_idealization(ModuleSpec::zmod(3), ip("(C(X,2) ; 0)"), 0)
            .member);

  // Mod 2 the coefficient 1/2 is not even a scalar.
  auto v = in_int_idealization(ModuleSpec::zmod(2), ip("(C(X,2) ; 0)"), 0);
  REQUIRE_FALSE(v.member);
  CHECK(v.witness.kind == WitnessKind::denominator);
  CHECK(v.witness.component == 0);

  auto w = in_int_idealization(ModuleSpec::zmod(3), ip("(0 ; 1/3*X)"), 0);
  REQUIRE_FALSE(w.member);
  CHECK(w.witness.kind == WitnessKind::denominator);
  CHECK(w.witness.component == 1);
}

TEST_CASE("membership over a free module needs one extra derivative") {
  ModuleSpec Z1 = ModuleSpec::free_zn(1);
  auto v = in_int_idealization(Z1, ip("(C(X,2) ; 0)"), 0);
  REQUIRE_FALSE(v.member);
  CHECK(v.witness.component == 0);

  CHECK(in_int_idealization(Z1, ip("(2*C(X,2) ; C(X,2))"), 0).member);

  // At level 1 the module slot now needs an integral derivative too.
  auto w = in_int_idealization(Z1, ip("(2*C(X,2) ; C(X,2))"), 1);
  REQUIRE_FALSE(w.member);
  CHECK(w.witness.component == 1);
  CHECK(in_int_idealization(Z1, ip("(2*C(X,2) ; 2*C(X,2))"), 1).member);

  CHECK_THROWS_AS(in_int_idealization(Z1, ip("(X ; 1, 2)"), 0),
                  std::invalid_argument);
}

TEST_CASE("membership over the rationals frees the module slot") {
  ModuleSpec Q = ModuleSpec::rationals();
  CHECK(in_int_idealization(Q, ip("(X ; 1/7*X^5)"), 0).member);
  CHECK_FALSE(in_int_idealization(Q, ip("(1/2*X ; 0)"), 0).member);
}

TEST_CASE("grid oracle agrees on the fixed corpus") {
  struct Case {
    ModuleSpec spec;
    const char* text;
    unsigned k;
  } cases[] = {
      {ModuleSpec::zmod(3), "(C(X,2) ; 0)", 0},
      {ModuleSpec::zmod(2), "(C(X,2) ; 0)", 0},
      {ModuleSpec::free_zn(1), "(C(X,2) ; 0)", 0},
      {ModuleSpec::free_zn(1), "(2*C(X,2) ; C(X,2))", 0},
      {ModuleSpec::free_zn(1), "(2*C(X,2) ; C(X,2))", 1},
      {ModuleSpec::rationals(), "(X ; 1/7*X^5)", 0},
  };
  for (const auto& c : cases) {
    IdealPoly F = ip(c.text);
    CHECK(static_cast<bool>(ideal_grid_oracle(c.spec, F, c.k)) ==
          in_int_idealization(c.spec, F, c.k).member);
  }
}

TEST_CASE("parsing pairs and module tags") {
  auto [F, mod] = parse_ideal_poly("(X^2 ; 2*X, 1) over Z(+)Z^2");
  CHECK(F.f == parse_poly("X^2"));
  REQUIRE(F.h.size() == 2);
  CHECK(F.h[0] == parse_poly("2*X"));
  CHECK(F.h[1] == parse_poly("1"));
  REQUIRE(mod.has_value());
  CHECK(*mod == ModuleSpec::free_zn(2));

  CHECK(*parse_ideal_poly("(X ; 1) over Z/5").second == ModuleSpec::zmod(5));
  CHECK_FALSE(parse_ideal_poly("(X ; 1)").second.has_value());

  CHECK(parse_module_spec("Z(+)Z^2") == ModuleSpec::free_zn(2));
  CHECK(parse_module_spec("Z/4") == ModuleSpec::zmod(4));
  CHECK(parse_module_spec("Q") == ModuleSpec::rationals());
  CHECK(parse_module_spec("Z").to_string() == "Z(+)Z");

  CHECK_THROWS_AS(parse_ideal_poly("(X ; 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_module_spec("Z/0"), std::invalid_argument);
}

TEST_CASE("canned corollary audits all pass") {
  CorollaryReport r = canned_corollary_checks();
  CHECK(r.all_pass());
  CHECK(r.rows.size() == 8);
  for (const auto& row : r.rows) CHECK(row.pass);
}
