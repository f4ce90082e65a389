#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/lattices.hpp"
#include "ivpoly/membership.hpp"

using namespace ivpoly;

namespace {

IMatrix diag(const std::vector<Int>& d) {
  IMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("modulus 2 basis, degree 4") {
  IntLattice L = basis_int_mod(2, 4);
  CHECK(L.degree_bound == 4);
  CHECK(L.basis == diag({Int(1), Int(1), Int(2), Int(2), Int(2)}));
  CHECK(L.row_poly(2) == parse_poly("2*C(X,2)"));
}

TEST_CASE("modulus 4 membership through the lattice") {
  IntLattice L = basis_int_mod(4, 8);
  CHECK(L.contains(parse_poly("2*C(X,2)")));
  CHECK_FALSE(L.contains(parse_poly("C(X,2)")));
  CHECK(L.contains(parse_poly("2*C(X,4) + C(X,2)")));
  CHECK_FALSE(L.contains(parse_poly("C(X,4)")));
  CHECK(L.contains(parse_poly("4*C(X,6)")));
  CHECK_FALSE(L.contains(parse_poly("2*C(X,6)")));
  CHECK_FALSE(L.contains(parse_poly("1/2*X")));   // not integer-valued
  CHECK_FALSE(L.contains(parse_poly("X^9")));     // beyond the bound
}

TEST_CASE("derivative-tower basis agrees with the decision procedure") {
  IntLattice L = basis_int_k(1, 4);
  CHECK(L.contains(parse_poly("2*C(X,2)")));
  CHECK_FALSE(L.contains(parse_poly("C(X,2)")));
  CHECK(L.contains(parse_poly("6*C(X,3)")));
  CHECK_FALSE(L.contains(parse_poly("3*C(X,3)")));
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(in_int_k(L.row_poly(i), 1).member);
}

TEST_CASE("composite modulus keeps the prime interactions") {
  IntLattice L = basis_int_mod(6, 6);
  CHECK(L.contains(parse_poly("2*C(X,2)")));
  CHECK_FALSE(L.contains(parse_poly("C(X,2)")));
  for (std::size_t i = 0; i < 7; ++i)
    CHECK(in_int_mod(L.row_poly(i), 6).member);
}

TEST_CASE("unit modulus collapses to the plain lattice") {
  IntLattice L = basis_int_mod(1, 5);
  CHECK(L.basis == diag({Int(1), Int(1), Int(1), Int(1), Int(1), Int(1)}));
  CHECK_THROWS_AS(basis_int_mod(0, 3), std::invalid_argument);
}

TEST_CASE("modulus 4 conjecture audit") {
  for (unsigned D : {6u, 12u}) {
    ConjectureReport r = conjecture_check_mod4(D);
    CHECK(r.degree_bound == D);
    CHECK(r.verdict == ConjectureVerdict::equal);
    CHECK(r.generators_are_members);
    CHECK(r.in_computed_only.empty());
    CHECK(r.in_conjectured_only.empty());
    CHECK(r.computed_pivots == r.conjectured_pivots);
  }
  CHECK_THROWS_AS(conjecture_check_mod4(3), std::invalid_argument);
}
