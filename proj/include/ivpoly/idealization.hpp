#pragma once
/* The idealization Z(+)M: pairs (x, m) with product (x,m)(x',m') =
 * (xx', xm' + x'm), so 0(+)M is a square-zero ideal. Supported modules:
 *   FreeZn(n)   M = Z^n        (module coordinates are rationals so that
 *                               points of the total quotient ring exist)
 *   ZmodM(m)    M = Z/mZ       (coordinates are residues in [0, m))
 *   RationalsQ  M = Q
 * Polynomials over the idealization decompose uniquely as F = f + h*eps with
 * f over the base and h module-valued; evaluation follows
 *   F(x + m*eps) = f(x) + (f'(x)*m + h(x))*eps. */

#include <optional>
#include <string>
#include <vector>

#include "ivpoly/membership.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

struct ModuleSpec {
  enum class Kind { FreeZn, ZmodM, RationalsQ } kind = Kind::FreeZn;
  std::size_t n = 1;  // FreeZn rank
  Int m = 0;          // ZmodM modulus

  static ModuleSpec free_zn(std::size_t n);
  static ModuleSpec zmod(const Int& m);
  static ModuleSpec rationals();

  std::size_t slots() const { return kind == Kind::FreeZn ? n : 1; }
  bool operator==(const ModuleSpec& o) const {
    return kind == o.kind && n == o.n && m == o.m;
  }
  bool operator!=(const ModuleSpec& o) const { return !(*this == o); }
  std::string to_string() const;  // "Z(+)Z^2", "Z(+)Z/4", "Z(+)Q"
};

/* One rational per slot; ZmodM entries are residues in [0, m). */
struct ModuleElem {
  std::vector<Rat> v;
  bool operator==(const ModuleElem& o) const { return v == o.v; }
  bool operator!=(const ModuleElem& o) const { return v != o.v; }
};

ModuleElem module_zero(const ModuleSpec& spec);
ModuleElem module_add(const ModuleSpec& spec, const ModuleElem& a,
                      const ModuleElem& b);
/* c . a. For ZmodM the scalar acts through the localization: c = p/q with
 * gcd(q, m) = 1; throws std::invalid_argument otherwise (such a scalar is
 * not defined on the module). */
ModuleElem module_scale(const ModuleSpec& spec, const Rat& c,
                        const ModuleElem& a);

struct IdealElem {
  Rat x;
  ModuleElem m;
  bool operator==(const IdealElem& o) const { return x == o.x && m == o.m; }
  bool operator!=(const IdealElem& o) const { return !(*this == o); }
  std::string to_string() const;  // "(x ; m1, m2)"
};

IdealElem ideal_mul(const ModuleSpec& spec, const IdealElem& a,
                    const IdealElem& b);
IdealElem ideal_add(const ModuleSpec& spec, const IdealElem& a,
                    const IdealElem& b);

/* F = f + h*eps; h has one polynomial per module slot. For ZmodM, h
 * coefficients are interpreted through the localization and reduced to
 * residues where needed. */
struct IdealPoly {
  Poly f;
  std::vector<Poly> h;
  std::string to_string() const;  // "(f ; h1, h2)"
};

/* The degree-k coefficient (f_k, h_k) as an element. */
IdealElem ideal_coefficient(const ModuleSpec& spec, const IdealPoly& F,
                            std::size_t k);

/* Closed evaluation by the derivative formula above. */
IdealElem ideal_eval(const ModuleSpec& spec, const IdealPoly& F,
                     const IdealElem& z);
/* Independent path: plain Horner through ideal_mul/ideal_add. */
IdealElem ideal_eval_horner(const ModuleSpec& spec, const IdealPoly& F,
                            const IdealElem& z);

/* Membership of F in the k-th ring of the filtration (k = 0 is plain
 * integer-valuedness of the evaluation map on the idealization):
 *   FreeZn:     f, f', ..., f^(k+1) integer-valued; every h_i with
 *               h_i, ..., h_i^(k) integer-valued
 *   ZmodM(m):   coefficient denominators of f coprime to m (else F lies
 *               outside the polynomial ring over the total quotient ring),
 *               f, ..., f^(k) integer-valued, h residues (the module kills
 *               every extra derivative condition)
 *   RationalsQ: f, ..., f^(k) integer-valued; h unrestricted
 * Witness component: 0 = base polynomial, i+1 = module slot i. */
MembershipVerdict in_int_idealization(const ModuleSpec& spec,
                                      const IdealPoly& F, unsigned k);

struct GridCheck {
  bool ok = true;
  unsigned deriv = 0;  // which ring derivative failed
  IdealElem point;     // failing (x, m)
  std::string note;
  explicit operator bool() const { return ok; }
};

/* Independent decision path: evaluates F, F', ..., F^(k) (component-wise
 * ring derivative) on a small complete grid of points (x, m) and checks the
 * values stay in Z(+)M. Undefined scalar action counts as failure. */
GridCheck ideal_grid_oracle(const ModuleSpec& spec, const IdealPoly& F,
                            unsigned k);

struct CorollaryReport {
  struct Row {
    std::string name;
    bool pass = false;
    std::string note;
  };
  std::vector<Row> rows;
  bool all_pass() const;
  std::string to_string() const;
};

/* Desk-scale audits of the decomposition statements: each row compares the
 * membership predicate against an independent evaluation oracle or a
 * structural identity on a fixed corpus. Deterministic. */
CorollaryReport canned_corollary_checks();

/* "Z(+)Z^n | Z(+)Z/m | Z(+)Q"; the "Z(+)" prefix may be omitted. */
ModuleSpec parse_module_spec(const std::string& text);

/* "(f ; h1, h2)" with an optional " over Z(+)Z^2 | Z(+)Z/4 | Z(+)Q" suffix.
 * Returns the polynomial and the named module, if present. */
std::pair<IdealPoly, std::optional<ModuleSpec>> parse_ideal_poly(
    const std::string& text);

}  // namespace ivpoly
