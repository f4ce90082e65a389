#pragma once
/* Vanishing ideals of finite rings and polynomial-function counts. For a
 * finite ring R (here Z/n and finite products of such), the degree-bounded
 * slice of I_R = {f in R[X] : f(R) = 0} is an additive lattice computed by
 * exhaustive evaluation; everything else (function counts, the Gilmer-style
 * principality test) reads off that lattice plus independent arithmetic. */

#include <string>
#include <vector>

#include "ivpoly/idealization.hpp"
#include "ivpoly/imatrix.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

inline constexpr unsigned long kMaxFiniteRingSize = 64;

struct FiniteRingSpec {
  enum class Kind { ZmodN, ProductOfZmod } kind = Kind::ZmodN;
  std::vector<Int> ns;  // factor moduli, each >= 2

  static FiniteRingSpec zmod(const Int& n);
  static FiniteRingSpec product(std::vector<Int> factors);

  Int size() const;          // product of the factor sizes
  bool is_reduced() const;   // no factor has a square divisor
  std::string to_string() const;  // "Z/6", "Z/2 x Z/3"
};

/* Additive basis of {f in R[X] : deg f <= D, f vanishes on R}, stored per
 * ring factor: factor j holds an integer lattice in Z^(D+1) whose image mod
 * n_j is the slice of that factor (the lattice always contains n_j * Z^(D+1),
 * so the quotient is finite). */
struct VanishingIdealSlice {
  FiniteRingSpec ring;
  unsigned degree_bound = 0;
  std::vector<IMatrix> factor_basis;

  /* Order of the slice as a subgroup of R[X]_{<=D}. */
  Int slice_order() const;
  bool is_zero_slice() const { return slice_order() == 1; }
};

VanishingIdealSlice vanishing_ideal(const FiniteRingSpec& R, unsigned D);

/* Whether some member of the slice generates, as an ideal of R[X], every
 * member of the slice. Requires D >= |R| so the minimal generators fit.
 * Decided factor by factor through the prime-power decomposition: fields get
 * an explicit generator certificate (X^p - X), higher prime powers get a
 * refutation whose computational premises are re-verified on the spot; a
 * violated premise raises internal_error rather than guessing. */
bool is_principal_slicewise(const FiniteRingSpec& R, unsigned D);

/* Number of distinct functions R -> R induced by polynomials, two ways:
 * cosets of the degree-(|R|-1) kernel slice, and an independent arithmetic
 * product over factorial gcds. |R| <= 64. */
Int poly_function_count(const FiniteRingSpec& R);
Int poly_function_count_formula(const FiniteRingSpec& R);

/* Whether every integer-valued module polynomial of degree <= D already has
 * module coefficients. For the free module the binomial basis answers this
 * directly and the first counterexample is returned as a witness. */
struct IntEqualsMX {
  bool equal = true;
  Poly witness;  // zero when equal
  explicit operator bool() const { return equal; }
};

IntEqualsMX int_equals_MX(const ModuleSpec& M, unsigned D);

}  // namespace ivpoly
