#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/ringext.hpp"

using namespace ivpoly;

namespace {

const RelationVector kEps1{{Int(0)}};
const RelationVector kEps2{{Int(0), Int(0)}};
const RelationVector kRho2{{Int(2)}};

GenDualElem elem1(const RelationVector& rel, const Rat& a, const Rat& b) {
  GenDualElem z(rel);
  z.set_coeff(0, a);
  z.set_coeff(1, b);
  return z;
}

}  // namespace

TEST_CASE("square-zero and idempotent-style generator arithmetic") {
  GenDualElem e1 = GenDualElem::generator(kEps2, 0);
  GenDualElem e2 = GenDualElem::generator(kEps2, 1);
  GenDualElem one = GenDualElem::scalar(kEps2, Rat(1));

  CHECK((e1 * e1).is_zero());
  GenDualElem p = (one + e1) * (one + e2);
  CHECK(p.coeff(0b00) == Rat(1));
  CHECK(p.coeff(0b01) == Rat(1));
  CHECK(p.coeff(0b10) == Rat(1));
  CHECK(p.coeff(0b11) == Rat(1));

  GenDualElem rho = GenDualElem::generator(kRho2, 0);
  CHECK(rho * rho == rho * Rat(2));
}

TEST_CASE("conjugate and norm at a fixed point") {
  GenDualElem z = elem1(kRho2, Rat(3), Rat(4));  // 3 + 4 rho, rho^2 = 2 rho
  auto [conj, norm] = conj_norm(z);
  CHECK(conj == elem1(kRho2, Rat(11), Rat(-4)));
  CHECK(norm == Rat(33));  // 3 * (3 + 2*4)
  CHECK(z * conj == GenDualElem::scalar(kRho2, norm));
  CHECK(is_regular(z));
  CHECK_FALSE(is_regular(elem1(kRho2, Rat(0), Rat(5))));
  CHECK_FALSE(is_regular(elem1(kRho2, Rat(4), Rat(-2))));  // x + ry = 0
}

TEST_CASE("evaluation of X^2 over a square-zero generator") {
  GenDualPoly F(kEps1);
  F.set_component(0, parse_poly("X^2"));
  GenDualElem z = elem1(kEps1, Rat(5), Rat(3));  // 5 + 3 eps
  GenDualElem want = elem1(kEps1, Rat(25), Rat(30));  // a^2 + 2ab eps
  CHECK(eval_direct(F, z) == want);
  CHECK(eval_closed_dual(F, z) == want);
  CHECK(eval_closed_rho(F, z) == want);
}

TEST_CASE("set partition enumeration and closed-form term counts") {
  CHECK(set_partitions({0, 1, 2}).size() == 5);
  CHECK(set_partitions({}).size() == 1);

  const Int point[] = {Int(2), Int(5), Int(15), Int(52)};
  const Int comp[] = {Int(3), Int(10), Int(37), Int(151)};
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(term_count_point_form(n) == point[n - 1]);
    CHECK(term_count_component_form(n) == comp[n - 1]);
  }
}

TEST_CASE("extension membership on fixed polynomials") {
  CHECK(in_int_ext(parse_gen_dual_poly("X + (C(X,2))*rho1", kRho2)).member);
  CHECK(in_int_ext(parse_gen_dual_poly("X + (C(X,2))*rho1",
                                       RelationVector{{Int(3)}}))
            .member);

  // The scalar component must preserve congruences mod r; C(X,2) breaks
  // mod 2 already.
  auto v = in_int_ext(parse_gen_dual_poly("C(X,2) + (X)*rho1", kRho2));
  REQUIRE_FALSE(v.member);
  CHECK(v.witness.kind != WitnessKind::none);
  CHECK(v.witness.component == 0);

  // eps^2 = 0 kills the cross term, so C(X,2)*eps evaluates integrally
  // everywhere even though C(X,2)' is not integer-valued.
  CHECK(in_int_ext(parse_gen_dual_poly("(C(X,2))*rho1", kEps1)).member);
  // The scalar component over eps needs an integer-valued derivative.
  CHECK_FALSE(in_int_ext(parse_gen_dual_poly("C(X,2)", kEps1)).member);
  CHECK(in_int_ext(parse_gen_dual_poly("2*C(X,2) + (C(X,2))*rho1", kEps1))
            .member);

  auto w = in_int_ext(parse_gen_dual_poly("(1/2*X)*rho1", kEps1));
  REQUIRE_FALSE(w.member);
  CHECK(w.witness.component == 1);
}

TEST_CASE("dense sampling agrees with the symbolic decision") {
  for (const char* s : {"C(X,2) + (X)*rho1", "(C(X,2))*rho1",
                        "C(X,3) + (2*C(X,2))*rho1", "(1/2)*rho1"}) {
    GenDualPoly F = parse_gen_dual_poly(s, kEps1);
    unsigned D = F.degree() < 0 ? 0u : static_cast<unsigned>(F.degree());
    CHECK(static_cast<bool>(dense_set_oracle(F, D)) ==
          in_int_ext(F).member);
  }
  CHECK_THROWS_AS(dense_set_oracle(parse_gen_dual_poly("X", kRho2), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      dense_set_oracle(parse_gen_dual_poly("X^3", kEps1), 1),
      std::invalid_argument);
}

TEST_CASE("pullback along the idempotent splitting") {
  GenDualPoly F = parse_gen_dual_poly("X + (C(X,2))*rho1", kRho2);
  PullbackResult r = pullback_iso(F);
  CHECK(r.first == parse_poly("X"));
  CHECK(r.second == parse_poly("X^2"));  // X + 2*C(X,2)
  CHECK(r.fiber_ok);
  CHECK(r.fiber_ok == in_int_ext(F).member);

  GenDualPoly bad = parse_gen_dual_poly("(C(X,2))*rho1", kRho2);
  CHECK(pullback_iso(bad).fiber_ok == in_int_ext(bad).member);
}

TEST_CASE("parser round trip and rejection") {
  GenDualPoly F = parse_gen_dual_poly("X^2 - 1 + (2*C(X,3))*rho1", kRho2);
  CHECK(F.component(0) == parse_poly("X^2 - 1"));
  CHECK(F.component(1) == parse_poly("2*C(X,3)"));
  CHECK(parse_gen_dual_poly(F.to_string(), kRho2) == F);

  CHECK_THROWS_AS(parse_gen_dual_poly("X + (X)*rho3", kRho2),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_gen_dual_poly("X + ", kRho2),
                  std::invalid_argument);
}
