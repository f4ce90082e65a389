#pragma once
/* Degree-bounded Z-bases, in binomial coordinates, for
 *   basis_int_mod(m, D): { f : f integer-valued, m | f(a+m)-f(a) for all a }
 *   basis_int_k(k, D):   { f : f, f', ..., f^(k) integer-valued }
 * and the audit of the conjectured modulus-4 basis.
 *
 * Column k of every matrix is the coefficient of C(X,k); a lattice is the
 * row span of its basis, kept in the canonical HNF of imatrix.hpp (which
 * places the degree-k basis polynomial in row k, pivot on the diagonal). */

#include <string>
#include <vector>

#include "ivpoly/imatrix.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

struct IntLattice {
  unsigned degree_bound = 0;  // columns = degree_bound + 1
  IMatrix basis;              // canonical HNF, full rank

  /* False when f exceeds the degree bound, has a non-integral binomial
   * coordinate, or falls outside the row span. */
  bool contains(const Poly& f) const;
  Poly row_poly(std::size_t i) const;
};

/* m = 0 is rejected; the sign of m is ignored. m = +-1 yields all integer
 * binomial coordinates (the full integer-valued lattice). */
IntLattice basis_int_mod(const Int& m, unsigned D);

IntLattice basis_int_k(unsigned k, unsigned D);

enum class ConjectureVerdict { equal, proper_sublattice, incomparable };
std::string to_string(ConjectureVerdict v);

struct ConjectureReport {
  unsigned degree_bound = 0;
  ConjectureVerdict verdict = ConjectureVerdict::equal;
  bool generators_are_members = false;  // all generators pass in_int_mod(., 4)
  IMatrix computed;     // basis_int_mod(4, D).basis
  IMatrix conjectured;  // HNF of the conjectured generators
  std::vector<Int> computed_pivots;
  std::vector<Int> conjectured_pivots;
  /* Separating vectors (binomial coordinates), empty when no separation in
   * that direction exists. */
  std::vector<Int> in_computed_only;
  std::vector<Int> in_conjectured_only;

  std::string to_string() const;
};

/* Audits, for degree <= D (D >= 6), the conjectured basis
 *   1, X, 2*C(X,2), 2*C(X,3), 2*C(X,4)+C(X,2), 2*C(X,5)+C(X,3),
 *   4*C(X,k) for k >= 6
 * of the modulus-4 lattice against the computed one. */
ConjectureReport conjecture_check_mod4(unsigned D);

}  // namespace ivpoly
