#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/imatrix.hpp"

using namespace ivpoly;

namespace {
IMatrix from_rows(std::size_t cols, std::vector<std::vector<Int>> rows) {
  IMatrix m(0, cols);
  for (auto& r : rows) m.append_row(r);
  return m;
}
}  // namespace

TEST_CASE("canonical form of a worked 2x2 lattice") {
  // span{(2,4),(1,1)}: the second coordinate is unconstrained, and with it
  // fixed the first is determined mod 2.
  IMatrix H = hnf(from_rows(2, {{Int(2), Int(4)}, {Int(1), Int(1)}}));
  CHECK(H == from_rows(2, {{Int(2), Int(0)}, {Int(1), Int(1)}}));
  CHECK(hnf(H) == H);
}

TEST_CASE("equal lattices from different generators") {
  IMatrix a = from_rows(2, {{Int(1), Int(2)}, {Int(0), Int(3)}});
  IMatrix b = from_rows(2, {{Int(1), Int(5)}, {Int(1), Int(2)}});
  CHECK(lattice_equal(a, b));
  IMatrix c = from_rows(2, {{Int(1), Int(2)}, {Int(0), Int(6)}});
  CHECK_FALSE(lattice_equal(a, c));
  CHECK(lattice_contains(hnf(a), {Int(1), Int(-1)}));
  CHECK_FALSE(lattice_contains(hnf(c), {Int(1), Int(-1)}));
}

TEST_CASE("zero rows and redundancy collapse") {
  IMatrix m = from_rows(3, {{Int(0), Int(0), Int(0)},
                            {Int(1), Int(2), Int(3)},
                            {Int(2), Int(4), Int(6)}});
  IMatrix H = hnf(m);
  CHECK(H.rows() == 1);
  CHECK(H == from_rows(3, {{Int(1), Int(2), Int(3)}}));
}

TEST_CASE("congruence kernel of a worked system") {
  // x + y = 0 mod 2 over Z^2.
  IMatrix A = from_rows(2, {{Int(1), Int(1)}});
  IMatrix K = congruence_lattice_basis(A, {Int(2)});
  CHECK(K == from_rows(2, {{Int(2), Int(0)}, {Int(1), Int(1)}}));

  // Exact equation x + y = 0 (modulus 0): rank-1 kernel.
  IMatrix K0 = congruence_lattice_basis(A, {Int(0)});
  CHECK(K0 == from_rows(2, {{Int(-1), Int(1)}}));
}

TEST_CASE("pivot metadata") {
  IMatrix H = hnf(from_rows(3, {{Int(0), Int(3), Int(0)},
                                {Int(0), Int(0), Int(5)}}));
  REQUIRE(H.rows() == 2);
  CHECK(pivot_column(H, 0) == 1);
  CHECK(pivot_column(H, 1) == 2);
  CHECK(H.at(0, 1) == 3);
  CHECK(H.at(1, 2) == 5);
}
