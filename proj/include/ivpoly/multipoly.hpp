#pragma once
/* Sparse multivariate polynomials over Q with a fixed number of variable
 * slots. The same container carries the monomial basis and the tensor
 * binomial basis prod_i C(X_i, k_i); conversions are exact. A polynomial
 * takes integer values on all of Z^v exactly when its tensor-binomial
 * coefficients are integers. */

#include <map>
#include <optional>
#include <vector>

#include "ivpoly/poly.hpp"

namespace ivpoly {

class MultiPoly {
 public:
  using Key = std::vector<unsigned>;  // one exponent per variable

  explicit MultiPoly(std::size_t nvars = 1) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rat& v);
  static MultiPoly variable(std::size_t nvars, std::size_t var);
  /* Embed a univariate polynomial into slot `var`. */
  static MultiPoly from_poly(const Poly& f, std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  const std::map<Key, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Key& k, const Rat& v);
  Rat coeff(const Key& k) const;
  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& s) const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && t_ == o.t_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Rat eval(const std::vector<Rat>& point) const;
  /* Substitute a number for one variable (the slot stays, exponent 0). */
  MultiPoly eval_var(std::size_t var, const Rat& value) const;
  /* Substitute images[i] for variable i; all images share the result arity. */
  MultiPoly substitute_all(const std::vector<MultiPoly>& images) const;
  /* Collapse to a univariate polynomial; requires all other slots constant. */
  Poly to_poly(std::size_t var) const;
  /* Exchange two variable slots. */
  MultiPoly swap_vars(std::size_t a, std::size_t b) const;

  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::map<Key, Rat> t_;  // zero coefficients are never stored
};

MultiPoly to_tensor_binomial(const MultiPoly& f);
MultiPoly from_tensor_binomial(const MultiPoly& f);

/* If f fails to be integer-valued on Z^v, returns the offending
 * tensor-binomial index, minimal in total degree (so the index itself,
 * read as a point of Z^v, evaluates to a non-integer). */
std::optional<MultiPoly::Key> non_integral_index(const MultiPoly& f);

inline bool integer_valued_on_lattice(const MultiPoly& f) {
  return !non_integral_index(f).has_value();
}

}  // namespace ivpoly
