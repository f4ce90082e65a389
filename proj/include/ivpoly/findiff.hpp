#pragma once
/* The divided-difference operator on polynomials:
 *   f(X+Y) - f(X) = Y * g(X,Y) for a unique g; Delta_Y f = g.
 * Specializing Y to 0 gives the formal derivative. All forms here are
 * computed term by term, so no polynomial division is ever needed and the
 * displacement is allowed to be zero. */

#include "ivpoly/multipoly.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

/* The unique g with Y*g(X,Y) = f(X+Y) - f(X). Variable 0 is X, variable 1
 * is Y. For nonconstant f, deg_X g = deg f - 1. */
MultiPoly delta(const Poly& f);

/* g(X,y) at a concrete displacement; delta_at(f, 0) equals f'. */
Poly delta_at(const Poly& f, const Rat& y);

/* Delta with a polynomial displacement: substitutes (first, disp) into the
 * two slots of delta(f). Both images must share an arity, which the result
 * inherits. The chain rule reads
 *   delta(f compose g) = delta_poly_arg(f, g embedded, g(X+Y)-g(X)) * delta(g). */
MultiPoly delta_poly_arg(const Poly& f, const MultiPoly& first,
                         const MultiPoly& disp);

/* y * Delta_{u*y} applied to variable `var` of P, where y is a fresh
 * variable appended after the existing slots. Exact at u = 0, where the
 * result degenerates to y * dP/dvar. Term rule:
 *   c * v^e  ->  sum_{j=0}^{e-1} C(e,j) u^(e-1-j) c v^j y^(e-j). */
MultiPoly delta_displaced(const MultiPoly& P, std::size_t var, const Int& u);

}  // namespace ivpoly
