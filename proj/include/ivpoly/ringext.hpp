#pragma once
/* The extension rings R[rho_1, ..., rho_n] with relations rho_i^2 = r_i*rho_i
 * (r_i = 0 gives a square-zero generator, written eps in the texts here).
 * Elements are sums over subsets S of {1..n} of coefficients times
 * rho_S = prod_{i in S} rho_i, multiplied by
 *
 *   rho_S * rho_T = (prod_{i in S cap T} r_i) * rho_{S u T}.
 *
 * Coefficients are rational so that points of the total quotient ring are
 * representable; membership decisions are always over base ring Z. */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ivpoly/membership.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

using Mask = std::uint32_t;

constexpr std::size_t kMaxGenerators = 16;           // arithmetic cap
constexpr std::size_t kMaxMembershipGenerators = 4;  // recursion cost cap

struct RelationVector {
  std::vector<Int> r;  // r[i] belongs to generator i+1

  std::size_t n() const { return r.size(); }
  bool all_zero() const;
  /* prod_{i in s cap t} r_i */
  Int overlap_product(Mask s, Mask t) const;
  bool operator==(const RelationVector& o) const { return r == o.r; }
  bool operator!=(const RelationVector& o) const { return r != o.r; }
};

/* "1" for the empty mask, otherwise "rho1*rho3" style. */
std::string mask_label(Mask s);

class GenDualElem {
 public:
  GenDualElem() : rel_{{Int(0)}} {}
  explicit GenDualElem(RelationVector rel);
  static GenDualElem scalar(const RelationVector& rel, const Rat& v);
  /* i is 0-based; returns rho_{i+1}. */
  static GenDualElem generator(const RelationVector& rel, std::size_t i);

  const RelationVector& relations() const { return rel_; }
  std::size_t n() const { return rel_.n(); }
  Rat coeff(Mask s) const;
  void set_coeff(Mask s, const Rat& v);
  const std::map<Mask, Rat>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  GenDualElem operator+(const GenDualElem& o) const;
  GenDualElem operator-(const GenDualElem& o) const;
  GenDualElem operator*(const GenDualElem& o) const;
  GenDualElem operator*(const Rat& s) const;
  bool operator==(const GenDualElem& o) const;
  bool operator!=(const GenDualElem& o) const { return !(*this == o); }

  /* All coordinates integers: the element lies in Z[rho_1..rho_n]. */
  bool integral() const;

  std::string to_string() const;

 private:
  RelationVector rel_;
  std::map<Mask, Rat> c_;  // no zero entries
  void check_same(const GenDualElem& o) const;
};

/* n = 1 only: (x + y(r - rho), x(x + ry)). The norm is multiplicative. */
std::pair<GenDualElem, Rat> conj_norm(const GenDualElem& z);

/* n = 1 only: z is a non-zerodivisor iff x != 0 and x + ry != 0. */
bool is_regular(const GenDualElem& z);

class GenDualPoly {
 public:
  GenDualPoly() : rel_{{Int(0)}} {}
  explicit GenDualPoly(RelationVector rel);

  const RelationVector& relations() const { return rel_; }
  std::size_t n() const { return rel_.n(); }
  Poly component(Mask s) const;
  void set_component(Mask s, const Poly& f);
  const std::map<Mask, Poly>& components() const { return comp_; }

  int degree() const;  // max over components; -1 when zero
  GenDualElem coefficient(std::size_t k) const;
  GenDualPoly derivative() const;  // component-wise d/dX

  GenDualPoly operator+(const GenDualPoly& o) const;
  GenDualPoly operator-(const GenDualPoly& o) const;
  GenDualPoly operator*(const GenDualPoly& o) const;
  GenDualPoly operator*(const Rat& s) const;
  bool operator==(const GenDualPoly& o) const;
  bool operator!=(const GenDualPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  RelationVector rel_;
  std::map<Mask, Poly> comp_;  // no zero entries
  void check_same(const GenDualPoly& o) const;
};

/* Horner evaluation of X -> z; ring-homomorphic in F. */
GenDualElem eval_direct(const GenDualPoly& f, const GenDualElem& z);

/* Set-partition closed form (all relations must be zero):
 *   F(x) = sum_{S} ( sum_{partitions S_1..S_k of S}
 *                      F^(k)(x_empty) * prod_i x_{S_i} ) * eps_S
 * where F^(k)(x_empty) is a ring element. Equals eval_direct. */
GenDualElem eval_closed_dual(const GenDualPoly& f, const GenDualElem& z);

/* n = 1 closed form F(x + y rho) = F(x) + Delta_{yr}F(x) * y rho; the
 * equivalent form F(x+yr) + y Delta_{yr}F(x) (rho - r) is computed too and
 * cross-checked internally. */
GenDualElem eval_closed_rho(const GenDualPoly& f, const GenDualElem& z);

/* Partitions of `elements` (distinct values), as lists of blocks, each block
 * a sorted list of elements; enumerated by restricted growth strings in
 * lexicographic order. */
std::vector<std::vector<std::vector<unsigned>>> set_partitions(
    const std::vector<unsigned>& elements);

/* Term counts of the two closed forms at a point with every coordinate
 * nonzero, by direct enumeration: summed over subsets S (point form), and
 * additionally over result components (component form). Their values are the
 * Bell numbers B_{n+1} and B_{n+2} - B_{n+1}. */
Int term_count_point_form(std::size_t n);
Int term_count_component_form(std::size_t n);

/* Component f_T must lie in the multiset family of {r_i : i not in T}, for
 * every T. Witness carries the failing component mask. Cap: n <= 4. */
MembershipVerdict in_int_ext(const GenDualPoly& f);

struct DenseCheck {
  bool ok = true;
  Int x;            // failing base point
  Mask bits = 0;    // failing eps subset
  GenDualElem value;
  explicit operator bool() const { return ok; }
};

/* Evaluates F over { x + sum_{i in b} eps_i : 0 <= x <= D + n, b subset }
 * and reports the first value outside Z[eps_1..eps_n]. For all-zero
 * relations and D >= max component degree this decides membership (the
 * sample set is polynomially dense enough to pin every component and
 * derivative). */
DenseCheck dense_set_oracle(const GenDualPoly& f, unsigned D);

struct PullbackResult {
  Poly first;    // f
  Poly second;   // f + r*g
  bool fiber_ok; // both coordinates mod-r members and g integer-valued
};

/* n = 1, r != 0: the map F = f + g rho -> (f, f + rg). fiber_ok is
 * equivalent to in_int_ext(F). */
PullbackResult pullback_iso(const GenDualPoly& f);

/* "f0 + (g)*rho1 + (h)*rho1*rho2" style; also accepts general +,-,*,^
 * combinations of numbers, X, C(X,k) and rho<i>. Throws
 * std::invalid_argument with a position on bad input. */
GenDualPoly parse_gen_dual_poly(const std::string& text,
                                const RelationVector& rel);

}  // namespace ivpoly
