#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivpoly/torsion.hpp"

using namespace ivpoly;

namespace {

IMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
  IMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("polynomial function counts, both paths") {
  struct Anchor {
    long n;
    long count;
  } anchors[] = {{2, 4},    {3, 27},   {4, 64},   {5, 3125},
                 {6, 108},  {8, 1024}, {9, 19683}, {12, 1728}};
  for (const auto& a : anchors) {
    FiniteRingSpec R = FiniteRingSpec::zmod(a.n);
    CHECK(poly_function_count(R) == Int(a.count));
    CHECK(poly_function_count_formula(R) == Int(a.count));
  }

  // Counts multiply over product rings.
  FiniteRingSpec P = FiniteRingSpec::product({Int(2), Int(3)});
  CHECK(poly_function_count(P) == Int(108));
  CHECK(poly_function_count(P) == poly_function_count_formula(P));
}

TEST_CASE("vanishing slice of the two-element field") {
  VanishingIdealSlice s = vanishing_ideal(FiniteRingSpec::zmod(2), 2);
  REQUIRE(s.factor_basis.size() == 1);
  CHECK(s.factor_basis[0] == from_rows({{Int(2), Int(0), Int(0)},
                                        {Int(0), Int(2), Int(0)},
                                        {Int(0), Int(1), Int(1)}}));
  // Only 0 and X + X^2 vanish on Z/2 in degree <= 2.
  CHECK(s.slice_order() == 2);

  // Degree 0: no nonzero constant vanishes.
  CHECK(vanishing_ideal(FiniteRingSpec::zmod(5), 0).is_zero_slice());
}

TEST_CASE("slice orders and ring products") {
  CHECK(vanishing_ideal(FiniteRingSpec::zmod(4), 4).slice_order() ==
        Int(4 * 4 * 4 * 4 * 4) / Int(64));  // |R[X]_{<=4}| / #functions
  FiniteRingSpec P = FiniteRingSpec::product({Int(2), Int(3)});
  VanishingIdealSlice s = vanishing_ideal(P, 5);
  REQUIRE(s.factor_basis.size() == 2);
  Int orders = vanishing_ideal(FiniteRingSpec::zmod(2), 5).slice_order() *
               vanishing_ideal(FiniteRingSpec::zmod(3), 5).slice_order();
  CHECK(s.slice_order() == orders);
}

TEST_CASE("principality matches reducedness") {
  for (long n : {2, 3, 5, 6, 30}) {
    FiniteRingSpec R = FiniteRingSpec::zmod(n);
    CHECK(R.is_reduced());
    CHECK(is_principal_slicewise(R, static_cast<unsigned>(n)));
  }
  for (long n : {4, 8, 9, 12}) {
    FiniteRingSpec R = FiniteRingSpec::zmod(n);
    CHECK_FALSE(R.is_reduced());
    CHECK_FALSE(is_principal_slicewise(R, static_cast<unsigned>(n) + 2));
  }
  CHECK(is_principal_slicewise(FiniteRingSpec::product({Int(2), Int(3)}), 6));
  CHECK(is_principal_slicewise(FiniteRingSpec::product({Int(2), Int(2)}), 4));
  CHECK_FALSE(
      is_principal_slicewise(FiniteRingSpec::product({Int(2), Int(4)}), 8));

  CHECK_THROWS_AS(is_principal_slicewise(FiniteRingSpec::zmod(6), 5),
                  std::invalid_argument);
}

TEST_CASE("ring spec construction guards") {
  CHECK_THROWS_AS(FiniteRingSpec::zmod(1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteRingSpec::product({}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteRingSpec::product({Int(2), Int(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(poly_function_count(FiniteRingSpec::zmod(65)),
                  std::invalid_argument);
  CHECK(FiniteRingSpec::zmod(6).to_string() == "Z/6");
  CHECK(FiniteRingSpec::product({Int(2), Int(3)}).to_string() == "Z/2 x Z/3");
  CHECK(FiniteRingSpec::zmod(64).size() == 64);
}

TEST_CASE("integer-valued equals coefficient ring only without free rank") {
  CHECK(int_equals_MX(ModuleSpec::rationals(), 10).equal);
  CHECK(int_equals_MX(ModuleSpec::zmod(6), 10).equal);
  CHECK(int_equals_MX(ModuleSpec::free_zn(1), 1).equal);

  IntEqualsMX r = int_equals_MX(ModuleSpec::free_zn(1), 6);
  REQUIRE_FALSE(r.equal);
  CHECK(r.witness == binomial_poly(2));
}
