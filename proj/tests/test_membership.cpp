#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/membership.hpp"

using namespace ivpoly;

TEST_CASE("plain membership on fixed polynomials") {
  for (int k = 0; k <= 6; ++k)
    CHECK(in_int(binomial_poly(static_cast<std::size_t>(k))).member);
  CHECK(in_int(parse_poly("C(X,2) + C(X,3)")).member);
  CHECK(in_int(parse_poly("1/2*X^2 + 1/2*X")).member);
  CHECK(in_int(Poly()).member);

  auto v = in_int(parse_poly("1/2*X"));
  REQUIRE_FALSE(v.member);
  CHECK(v.witness.kind == WitnessKind::eval_point);
  CHECK(witness_falsifies(parse_poly("1/2*X"), v.witness));
}

TEST_CASE("derivative tower membership") {
  CHECK(in_int_k(parse_poly("C(X,2)"), 0).member);
  CHECK_FALSE(in_int_k(parse_poly("C(X,2)"), 1).member);
  CHECK(in_int_k(parse_poly("2*C(X,2)"), 1).member);
  CHECK(in_int_k(parse_poly("2*C(X,2)"), 3).member);
  CHECK(in_int_k(parse_poly("6*C(X,3)"), 1).member);
  CHECK_FALSE(in_int_k(parse_poly("3*C(X,3)"), 1).member);
  CHECK(in_int_k(parse_poly("X^5"), 4).member);

  auto v = in_int_k(parse_poly("C(X,3)"), 2);
  REQUIRE_FALSE(v.member);
  CHECK(witness_falsifies(parse_poly("C(X,3)"), v.witness));
}

TEST_CASE("congruence-preserving membership") {
  // C(2,2) - C(0,2) = 1 is not divisible by 2.
  auto v = in_int_mod(parse_poly("C(X,2)"), 2);
  REQUIRE_FALSE(v.member);
  CHECK(witness_falsifies(parse_poly("C(X,2)"), v.witness));

  CHECK(in_int_mod(parse_poly("C(X,1)"), 2).member);
  CHECK(in_int_mod(parse_poly("2*C(X,2)"), 2).member);
  CHECK(in_int_mod(parse_poly("X^4 - 7*X + 3"), 5).member);
  CHECK(in_int_mod(parse_poly("C(X,2)"), 1).member);
  CHECK(in_int_mod(parse_poly("C(X,2)"), -3).member ==
        in_int_mod(parse_poly("C(X,2)"), 3).member);
  // 2 C(X,2) survives modulus 6 but C(X,2) does not.
  CHECK(in_int_mod(parse_poly("2*C(X,2)"), 6).member);
  CHECK_FALSE(in_int_mod(parse_poly("C(X,2)"), 6).member);
  CHECK_THROWS_AS(in_int_mod(parse_poly("X"), 0), std::invalid_argument);
}

TEST_CASE("multiset membership degenerate forms") {
  Poly f = parse_poly("C(X,3)");
  CHECK(in_int_multiset(f, {}).member == in_int(f).member);
  CHECK(in_int_multiset(f, {Int(0)}).member == in_int_k(f, 1).member);
  CHECK(in_int_multiset(f, {Int(0), Int(0)}).member ==
        in_int_k(f, 2).member);
  CHECK(in_int_multiset(f, {Int(2)}).member == in_int_mod(f, 2).member);
  CHECK(in_int_multiset(f, {Int(-5)}).member ==
        in_int_multiset(f, {Int(5)}).member);
  CHECK_THROWS_AS(
      in_int_multiset(f, {Int(1), Int(1), Int(1), Int(1), Int(1)}),
      std::invalid_argument);
}

TEST_CASE("integer polynomials live in every multiset ring") {
  for (const char* s : {"X^3 - 4*X + 1", "X", "11"}) {
    Poly f = parse_poly(s);
    for (std::vector<Int> S :
         {std::vector<Int>{}, std::vector<Int>{Int(0)},
          std::vector<Int>{Int(2), Int(3)}, std::vector<Int>{Int(0), Int(4)},
          std::vector<Int>{Int(2), Int(2), Int(2)}})
      CHECK(in_int_multiset(f, S).member);
  }
}

TEST_CASE("multiset witnesses replay by plain evaluation") {
  for (const char* s :
       {"C(X,2)", "C(X,3)", "1/2*X", "C(X,4) + C(X,2)", "1/3*X^3"}) {
    Poly f = parse_poly(s);
    for (std::vector<Int> S :
         {std::vector<Int>{Int(2)}, std::vector<Int>{Int(0), Int(2)},
          std::vector<Int>{Int(3), Int(3)}, std::vector<Int>{Int(6)}}) {
      auto v = in_int_multiset(f, S);
      if (!v.member) CHECK(witness_falsifies(f, v.witness));
    }
  }
}

TEST_CASE("delta chain replay on a fixed witness") {
  // One level, u = 2, y = 1: X (X-1)/2 -> (f(X+2) - f(X))/2 = X + 1/2,
  // which is 1/2 at X = 0.
  Poly f = parse_poly("C(X,2)");
  CHECK(replay_delta_chain(f, {Int(2)}, {Int(1)}, Int(0)) == Rat(1, 2));
  // Zero displacement product means the derivative path: y * f'(X) at y=1.
  CHECK(replay_delta_chain(f, {Int(0)}, {Int(1)}, Int(1)) == Rat(1, 2));
}
