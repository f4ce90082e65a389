#pragma once
/* Univariate polynomials over Q in the monomial basis (Poly) and in the
 * binomial basis C(X,0), C(X,1), ... (BinomPoly), with exact conversion both
 * ways and a parser/printer for the two text syntaxes
 *   "3/2*X^2 - X + 1"        and        "C(X,2) + 2*C(X,5)".
 * The zero polynomial reports degree -1 (the "minus infinity" marker). */

#include <cstddef>
#include <string>
#include <vector>

#include "ivpoly/numeric.hpp"

namespace ivpoly {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rat& v);
  static Poly x();
  static Poly monomial(std::size_t k, const Rat& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly operator/(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative() const;
  /* f(X + c) */
  Poly shifted(const Rat& c) const;
  Poly compose(const Poly& g) const;
  Rat eval(const Rat& x) const;

  bool integer_coeffs() const;
  /* lcm of coefficient denominators (1 for the zero polynomial) */
  Int denominator_lcm() const;

  std::string to_string() const;

 private:
  std::vector<Rat> c_;  // c_[k] multiplies X^k; trailing entry nonzero
  void trim();
};

class BinomPoly {
 public:
  BinomPoly() = default;
  explicit BinomPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const BinomPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BinomPoly& o) const { return !(*this == o); }

  bool integer_coeffs() const;

  std::string to_string() const;

 private:
  std::vector<Rat> c_;  // c_[k] multiplies C(X,k); trailing entry nonzero
  void trim();
};

/* C(X,k) expanded into the monomial basis. */
Poly binomial_poly(std::size_t k);

BinomPoly to_binomial(const Poly& f);
Poly from_binomial(const BinomPoly& f);

/* Accepts either syntax (terms may mix X^k and C(X,j) atoms); whitespace is
 * insignificant. Throws std::invalid_argument with a position on bad input. */
Poly parse_poly(const std::string& text);

}  // namespace ivpoly
