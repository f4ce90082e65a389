#pragma once
/* Exact scalar layer: arbitrary-precision integers and rationals on top of
 * GMP's C++ bindings, plus the small combinatorial helpers used everywhere.
 * Rationals are kept canonical (reduced, positive denominator). */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivpoly {

using Int = mpz_class;
using Rat = mpq_class;

/* Thrown when an internal consistency check fails; the CLI maps this to its
 * own exit code, distinct from usage errors. */
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/* Representative of a mod m in [0, |m|). */
inline Int mod_floor(const Int& a, const Int& m) {
  if (m == 0) throw std::invalid_argument("mod_floor: zero modulus");
  Int r;
  Int mm = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/* nCk for any integer n (including negative) and k >= 0. */
inline Int binomial(const Int& n, unsigned long k) {
  Int b;
  mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
  return b;
}

inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat qpow(const Rat& base, unsigned long e) {
  Rat r = 1;
  Rat b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/* Inverse of a mod m (m >= 2); throws if gcd(a, m) != 1. */
inline Int mod_inverse(const Int& a, const Int& m) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::invalid_argument("mod_inverse: not invertible mod " + m.get_str());
  return inv;
}

/* Bell numbers B_0..B_n via the Bell triangle. */
inline std::vector<Int> bell_numbers(std::size_t n) {
  std::vector<Int> bell{Int(1)};
  std::vector<Int> row{Int(1)};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Int> next;
    next.reserve(i + 1);
    next.push_back(row.back());
    for (const Int& v : row) next.push_back(next.back() + v);
    row = std::move(next);
    bell.push_back(row.front());
  }
  return bell;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace ivpoly
