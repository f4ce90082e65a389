#pragma once
/* Membership tests for the integer-valued polynomial rings over Z:
 *
 *   in_int          f(Z) subset of Z
 *   in_int_k        f, f', ..., f^(k) all integer-valued
 *   in_int_mod      f integer-valued and m | f(a+m) - f(a) for all a
 *   in_int_multiset the recursive family indexed by a finite multiset S:
 *                     S = {}        -> in_int
 *                     S = T u {s}   -> member of the T-family, and for every
 *                                      submultiset U of T and every integer y,
 *                                      y * Delta_{y * s * prod(T \ U)} f is a
 *                                      member of the U-family.
 *
 * The universal quantifiers over y are discharged symbolically: each
 * application of y * Delta_{u*y} introduces a fresh polynomial variable, and
 * a leaf condition "integer-valued on Z^v" is decided exactly through the
 * tensor binomial basis. Every negative verdict carries a witness that can be
 * replayed by plain evaluation, with no shared code path. */

#include <optional>
#include <string>
#include <vector>

#include "ivpoly/numeric.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

enum class WitnessKind {
  none,
  eval_point,   // f(point[0]) is not an integer (after deriv differentiations)
  congruence,   // modulus does not divide f(point[0]) - f(point[1])
  delta_chain,  // replay_delta_chain(f, multipliers, displacements, point[0])
                // is not an integer
  denominator,  // f has coefficient `value` whose denominator is not coprime
                // to `modulus` (so f falls outside the admissible coefficient
                // ring)
};

struct Witness {
  WitnessKind kind = WitnessKind::none;
  std::vector<Int> point;          // evaluation point(s)
  std::vector<Int> multipliers;    // the u of each y*Delta_{u*y} level
  std::vector<Int> displacements;  // the concrete y of each level
  Rat value;                       // the offending value
  Int modulus = 0;                 // congruence/denominator failures only
  unsigned deriv = 0;              // how many derivatives were taken first
  std::uint32_t component = 0;     // sub-object selector for composite rings
  std::string note;

  std::string to_string() const;
};

struct MembershipVerdict {
  bool member = true;
  Witness witness;  // kind == none iff member

  explicit operator bool() const { return member; }
};

MembershipVerdict in_int(const Poly& f);
MembershipVerdict in_int_k(const Poly& f, unsigned k);

/* m = 0 is rejected (the quotient defining the telescoping criterion would
 * divide by zero); otherwise the sign of m is irrelevant and |m| is used.
 * m = 1 or -1 collapses to in_int. */
MembershipVerdict in_int_mod(const Poly& f, const Int& m);

/* Multiset entries may repeat and may include 0; order never matters.
 * {} collapses to in_int, {0,...,0} (k zeros) to in_int_k(f, k), {m} to
 * in_int_mod(f, m). Throws std::invalid_argument when S has more than
 * max_size elements (quantifier unfolding is exponential in |S|). */
MembershipVerdict in_int_multiset(const Poly& f, std::vector<Int> S,
                                  std::size_t max_size = 4);

/* Applies the witness chain to f by plain univariate steps: at level i,
 *   P <- y_i * (P(X + u_i*y_i) - P(X)) / (u_i*y_i)   if u_i*y_i != 0,
 *   P <- y_i * P'                                    if u_i*y_i == 0,
 * then evaluates at x0. Used to replay delta_chain witnesses independently
 * of the symbolic decision procedure. */
Rat replay_delta_chain(const Poly& f, const std::vector<Int>& multipliers,
                       const std::vector<Int>& displacements, const Int& x0);

/* True iff the witness, replayed against f, actually falsifies the claimed
 * membership. A verdict with kind none never replays. */
bool witness_falsifies(const Poly& f, const Witness& w);

}  // namespace ivpoly
