#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/findiff.hpp"
#include "ivpoly/poly.hpp"

using namespace ivpoly;

namespace {
MultiPoly term(std::size_t nvars, std::vector<unsigned> exps, Rat c) {
  MultiPoly m(nvars);
  m.add_term(exps, c);
  return m;
}
}  // namespace

TEST_CASE("difference quotient of a square") {
  // ((X+Y)^2 - X^2)/Y = 2X + Y
  MultiPoly d = delta(parse_poly("X^2"));
  CHECK(d == term(2, {1, 0}, Rat(2)) + term(2, {0, 1}, Rat(1)));
  CHECK(delta(parse_poly("X")) == term(2, {0, 0}, Rat(1)));
  CHECK(delta(parse_poly("7")) == MultiPoly(2));
}

TEST_CASE("concrete displacements and the derivative limit") {
  Poly f = parse_poly("X^3 - X");
  CHECK(delta_at(f, Rat(0)) == f.derivative());
  CHECK(delta_at(f, Rat(2)) ==
        (f.shifted(Rat(2)) - f) / Rat(2));
  CHECK(delta_at(parse_poly("X^2"), Rat(3)) == parse_poly("2*X + 3"));
}

TEST_CASE("displaced operator appends a fresh variable") {
  // X^2 as a 1-variable polynomial; y * Delta_{2y} gives
  // ((X+2y)^2 - X^2)/2 = 2Xy + 2y^2.
  MultiPoly base = MultiPoly::from_poly(parse_poly("X^2"), 1, 0);
  MultiPoly d = delta_displaced(base, 0, Int(2));
  CHECK(d == term(2, {1, 1}, Rat(2)) + term(2, {0, 2}, Rat(2)));
  // u = 0 degenerates to y * d/dX.
  MultiPoly d0 = delta_displaced(base, 0, Int(0));
  CHECK(d0 == term(2, {1, 1}, Rat(2)));
}

TEST_CASE("chain rule on a worked pair") {
  Poly f = parse_poly("X^2");
  Poly g = parse_poly("X + 1");
  // (f of g)(X) = (X+1)^2, so its quotient is 2X + 2 + Y.
  MultiPoly lhs = delta(f.compose(g));
  CHECK(lhs == term(2, {1, 0}, Rat(2)) + term(2, {0, 0}, Rat(2)) +
                   term(2, {0, 1}, Rat(1)));
  MultiPoly gX = MultiPoly::from_poly(g, 2, 0);
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  MultiPoly disp = MultiPoly::from_poly(g, 2, 0).substitute_all({x + y, y}) - gX;
  CHECK(lhs == delta_poly_arg(f, gX, disp) * delta(g));
}

TEST_CASE("product rule on a worked pair") {
  Poly f = parse_poly("X");
  Poly g = parse_poly("X^2");
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  MultiPoly fXY = MultiPoly::from_poly(f, 2, 0).substitute_all({x + y, y});
  MultiPoly rhs =
      fXY * delta(g) + delta(f) * MultiPoly::from_poly(g, 2, 0);
  CHECK(delta(f * g) == rhs);
}

TEST_CASE("iterated displacements commute up to variable order") {
  Poly f = parse_poly("X^4 - 2*X");
  MultiPoly base = MultiPoly::from_poly(f, 1, 0);
  MultiPoly p12 = delta_displaced(delta_displaced(base, 0, Int(3)), 0, Int(-1));
  MultiPoly p21 = delta_displaced(delta_displaced(base, 0, Int(-1)), 0, Int(3));
  CHECK(p12 == p21.swap_vars(1, 2));
}
