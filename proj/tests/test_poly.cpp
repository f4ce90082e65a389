#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/poly.hpp"

using namespace ivpoly;

TEST_CASE("binomial polynomials expand to known coefficients") {
  CHECK(binomial_poly(0) == Poly(std::vector<Rat>{Rat(1)}));
  CHECK(binomial_poly(1) == Poly(std::vector<Rat>{Rat(0), Rat(1)}));
  // C(X,2) = (X^2 - X)/2
  CHECK(binomial_poly(2) ==
        Poly(std::vector<Rat>{Rat(0), Rat(-1, 2), Rat(1, 2)}));
  // C(X,3) = (X^3 - 3X^2 + 2X)/6
  CHECK(binomial_poly(3) == Poly(std::vector<Rat>{Rat(0), Rat(1, 3),
                                                  Rat(-1, 2), Rat(1, 6)}));
  for (int k = 0; k <= 8; ++k)
    for (int x = -4; x <= 8; ++x)
      CHECK(is_integer(binomial_poly(static_cast<std::size_t>(k)).eval(Rat(x))));
}

TEST_CASE("monomial-to-binomial coordinates match Stirling values") {
  BinomPoly b = to_binomial(Poly::monomial(3, Rat(1)));
  // X^3 = C(X,1) + 6 C(X,2) + 6 C(X,3)
  CHECK(b.coeff(0) == 0);
  CHECK(b.coeff(1) == 1);
  CHECK(b.coeff(2) == 6);
  CHECK(b.coeff(3) == 6);
  CHECK(from_binomial(b) == Poly::monomial(3, Rat(1)));

  BinomPoly x4 = to_binomial(Poly::monomial(4, Rat(1)));
  // X^4 = C(X,1) + 14 C(X,2) + 36 C(X,3) + 24 C(X,4)
  CHECK(x4.coeff(1) == 1);
  CHECK(x4.coeff(2) == 14);
  CHECK(x4.coeff(3) == 36);
  CHECK(x4.coeff(4) == 24);
}

TEST_CASE("arithmetic on fixed values") {
  Poly f = parse_poly("X^2 - 1");
  Poly g = parse_poly("X + 1");
  CHECK(f + g == parse_poly("X^2 + X"));
  CHECK(f * g == parse_poly("X^3 + X^2 - X - 1"));
  CHECK(f - f == Poly());
  CHECK(f.derivative() == parse_poly("2*X"));
  CHECK(f.shifted(Rat(1)) == parse_poly("X^2 + 2*X"));
  CHECK(f.compose(g) == parse_poly("X^2 + 2*X"));
  CHECK((f / Rat(2)) == parse_poly("1/2*X^2 - 1/2"));
  CHECK(f.eval(Rat(3)) == 8);
  CHECK(f.eval(Rat(1, 2)) == Rat(-3, 4));
  CHECK(Poly().degree() == -1);
  CHECK(parse_poly("0").degree() == -1);
}

TEST_CASE("coefficient predicates") {
  CHECK(parse_poly("3*X^2 - 7").integer_coeffs());
  CHECK_FALSE(parse_poly("1/2*X").integer_coeffs());
  CHECK(parse_poly("1/6*X^3 + 1/4*X").denominator_lcm() == 12);
  CHECK(parse_poly("X").denominator_lcm() == 1);
}

TEST_CASE("parser accepts both bases and reports positions") {
  CHECK(parse_poly("C(X,2)") == binomial_poly(2));
  CHECK(parse_poly("2*C(X,3) + 1") ==
        binomial_poly(3) * Rat(2) + Poly(std::vector<Rat>{Rat(1)}));
  CHECK(parse_poly("1/2*X^2 - 1/2*X") == binomial_poly(2));
  CHECK(parse_poly("-X") == Poly(std::vector<Rat>{Rat(0), Rat(-1)}));
  CHECK(parse_poly(" X ^ 2 ") == Poly::monomial(2, Rat(1)));

  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1/2 X"), std::invalid_argument);  // missing '*'
  CHECK_THROWS_AS(parse_poly("X +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("C(X)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("Y"), std::invalid_argument);
}

TEST_CASE("text round-trips through both renderings") {
  const char* samples[] = {"0", "1", "-1/2", "X", "2*X^3 - 1/3*X + 5",
                           "C(X,4)", "3*C(X,2) - C(X,1)"};
  for (const char* s : samples) {
    Poly f = parse_poly(s);
    CHECK(parse_poly(f.to_string()) == f);
    CHECK(parse_poly(to_binomial(f).to_string()) == f);
  }
}
