#include "ivpoly/torsion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ivpoly {

namespace {

void check_size(const FiniteRingSpec& R, const char* who) {
  if (R.size() > static_cast<long>(kMaxFiniteRingSize))
    throw std::invalid_argument(std::string(who) + ": ring size exceeds " +
                                std::to_string(kMaxFiniteRingSize));
}

std::vector<std::pair<Int, unsigned>> prime_power_factors(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.push_back({p, a});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

/* Coefficients of X(X-1)...(X-k+1), constant term first. */
std::vector<Int> falling_factorial(unsigned k) {
  std::vector<Int> c{Int(1)};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Int> next(c.size() + 1, Int(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= Int(i) * c[j];
    }
    c = std::move(next);
  }
  return c;
}

std::vector<Int> reduce_trim(std::vector<Int> c, const Int& p) {
  for (Int& x : c) x = mod_floor(x, p);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/* Remainder test f mod g over Z/p, g monic after reduction. */
bool divisible_mod_p(const std::vector<Int>& f_raw,
                     const std::vector<Int>& g_raw, const Int& p) {
  std::vector<Int> f = reduce_trim(f_raw, p);
  std::vector<Int> g = reduce_trim(g_raw, p);
  if (g.empty()) throw internal_error("divisible_mod_p: zero divisor polynomial");
  if (g.back() != 1) throw internal_error("divisible_mod_p: divisor not monic");
  while (f.size() >= g.size()) {
    Int lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t j = 0; j < g.size(); ++j)
      f[shift + j] = mod_floor(f[shift + j] - lead * g[j], p);
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f.empty();
}

unsigned factorial_valuation(unsigned k, const Int& p) {
  unsigned v = 0;
  Int q = p;
  while (q <= k) {
    v += static_cast<unsigned>(Int(k / q).get_ui());
    q *= p;
  }
  return v;
}

/* Pad a coefficient vector to the slice width D+1; degree overflow is a
 * caller bug. */
std::vector<Int> pad_to(const std::vector<Int>& c, unsigned D) {
  if (c.size() > D + 1) throw internal_error("pad_to: degree exceeds slice");
  std::vector<Int> v(D + 1, Int(0));
  std::copy(c.begin(), c.end(), v.begin());
  return v;
}

IMatrix factor_slice(const Int& n, unsigned D) {
  std::size_t rows = static_cast<std::size_t>(n.get_ui());
  IMatrix A(rows, D + 1);
  for (std::size_t a = 0; a < rows; ++a) {
    Int pw = 1;
    for (unsigned k = 0; k <= D; ++k) {
      A.at(a, k) = pw;
      pw *= Int(static_cast<unsigned long>(a));
    }
  }
  return congruence_lattice_basis(A, std::vector<Int>(rows, n));
}

Int slice_order_of(const IMatrix& basis, const Int& n, unsigned D) {
  Int pivot_product = 1;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    long c = pivot_column(basis, i);
    if (c < 0) throw internal_error("slice_order_of: zero basis row");
    pivot_product *= basis.at(i, static_cast<std::size_t>(c));
  }
  Int total = ipow(n, D + 1);
  if (total % pivot_product != 0)
    throw internal_error("slice_order_of: lattice index does not divide");
  return total / pivot_product;
}

/* Fields: X^p - X vanishes everywhere, its multiples fill the slice, and
 * every slice member reduces to a multiple. All three facts are re-checked;
 * a failure would contradict the construction of the slice itself. */
bool field_certificate(const Int& p, unsigned D, const IMatrix& basis) {
  unsigned up = static_cast<unsigned>(p.get_ui());
  for (unsigned j = 0; j + up <= D; ++j) {
    std::vector<Int> v(D + 1, Int(0));
    v[j + up] = 1;
    v[j + 1] -= 1;
    if (!lattice_contains(basis, v))
      throw internal_error("field_certificate: multiple of X^p - X escapes the slice");
  }
  std::vector<Int> g(up + 1, Int(0));
  g[1] = -1;
  g[up] += 1;
  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (!divisible_mod_p(basis.row(i), g, p))
      throw internal_error("field_certificate: slice member not a multiple of X^p - X");
  return true;
}

/* Prime powers p^a with a >= 2: no single slice member generates the slice.
 * With k0 = min{k : k! has p-valuation >= a}, the premises below force, for
 * any candidate generator g, first that g is nonzero mod p (the slice holds
 * a monic polynomial), then, by peeling one factor of p at a time from
 * p^(a-1) * X(X-1)...(X-p+1) = g*h, that X(X-1)...(X-p+1) lands in (g mod p).
 * Premise 3 puts (g mod p) inside ((X)_{k0} mod p), whose degree k0 exceeds
 * p by premise 4: a nonzero polynomial of degree p cannot sit there. */
bool prime_power_refutation(const Int& p, unsigned a, unsigned D,
                            const IMatrix& basis) {
  unsigned up = static_cast<unsigned>(p.get_ui());
  unsigned k0 = 0;
  while (factorial_valuation(k0, p) < a) ++k0;

  if (!(k0 > up))
    throw internal_error("prime_power_refutation: premise k0 > p violated");
  if (k0 > D)
    throw internal_error("prime_power_refutation: slice too small for k0");

  std::vector<Int> m0 = falling_factorial(k0);
  if (!lattice_contains(basis, pad_to(m0, D)))
    throw internal_error(
        "prime_power_refutation: monic falling factorial escapes the slice");

  std::vector<Int> w = falling_factorial(up);
  Int scale = ipow(p, a - 1);
  for (Int& c : w) c *= scale;
  if (!lattice_contains(basis, pad_to(w, D)))
    throw internal_error(
        "prime_power_refutation: scaled falling factorial escapes the slice");

  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (!divisible_mod_p(basis.row(i), m0, p))
      throw internal_error(
          "prime_power_refutation: slice member not divisible mod p");

  return false;
}

}  // namespace

FiniteRingSpec FiniteRingSpec::zmod(const Int& n) {
  if (n < 2) throw std::invalid_argument("zmod: modulus must be at least 2");
  FiniteRingSpec R;
  R.kind = Kind::ZmodN;
  R.ns = {n};
  return R;
}

FiniteRingSpec FiniteRingSpec::product(std::vector<Int> factors) {
  if (factors.empty())
    throw std::invalid_argument("product: at least one factor");
  for (const Int& n : factors)
    if (n < 2)
      throw std::invalid_argument("product: every factor must be at least 2");
  FiniteRingSpec R;
  R.kind = Kind::ProductOfZmod;
  R.ns = std::move(factors);
  return R;
}

Int FiniteRingSpec::size() const {
  Int s = 1;
  for (const Int& n : ns) s *= n;
  return s;
}

bool FiniteRingSpec::is_reduced() const {
  for (const Int& n : ns)
    for (const auto& [p, a] : prime_power_factors(n))
      if (a > 1) return false;
  return true;
}

std::string FiniteRingSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << ns[i].get_str();
  }
  return os.str();
}

VanishingIdealSlice vanishing_ideal(const FiniteRingSpec& R, unsigned D) {
  check_size(R, "vanishing_ideal");
  VanishingIdealSlice s;
  s.ring = R;
  s.degree_bound = D;
  for (const Int& n : R.ns) s.factor_basis.push_back(factor_slice(n, D));
  return s;
}

Int VanishingIdealSlice::slice_order() const {
  Int order = 1;
  for (std::size_t j = 0; j < factor_basis.size(); ++j)
    order *= slice_order_of(factor_basis[j], ring.ns[j], degree_bound);
  return order;
}

bool is_principal_slicewise(const FiniteRingSpec& R, unsigned D) {
  check_size(R, "is_principal_slicewise");
  if (Int(D) < R.size())
    throw std::invalid_argument(
        "is_principal_slicewise: degree bound below the ring size");
  bool principal = true;
  for (const Int& n : R.ns) {
    for (const auto& [p, a] : prime_power_factors(n)) {
      IMatrix basis = factor_slice(ipow(p, a), D);
      bool factor_ok = a == 1 ? field_certificate(p, D, basis)
                              : prime_power_refutation(p, a, D, basis);
      principal = principal && factor_ok;
    }
  }
  return principal;
}

Int poly_function_count(const FiniteRingSpec& R) {
  check_size(R, "poly_function_count");
  Int count = 1;
  for (const Int& n : R.ns) {
    unsigned D = static_cast<unsigned>(n.get_ui()) - 1;
    Int kernel = slice_order_of(factor_slice(n, D), n, D);
    Int total = ipow(n, D + 1);
    if (total % kernel != 0)
      throw internal_error("poly_function_count: kernel order does not divide");
    count *= total / kernel;
  }
  return count;
}

Int poly_function_count_formula(const FiniteRingSpec& R) {
  check_size(R, "poly_function_count_formula");
  Int count = 1;
  for (const Int& n : R.ns) {
    Int fact = 1;
    for (Int k = 0; k < n; ++k) {
      if (k > 0) fact *= k;
      count *= n / gcd(n, fact);
    }
  }
  return count;
}

IntEqualsMX int_equals_MX(const ModuleSpec& M, unsigned D) {
  switch (M.kind) {
    case ModuleSpec::Kind::RationalsQ:
      return {};  // divisible module: torsion-free quotient
    case ModuleSpec::Kind::ZmodM:
      return {};  // every admissible scalar is already a residue
    case ModuleSpec::Kind::FreeZn:
      /* Slot-wise the question reduces to the binomial basis: the first
       * C(X,k) with a fractional coefficient is integer-valued without
       * having integer coefficients. */
      for (unsigned k = 0; k <= D; ++k) {
        Poly b = binomial_poly(k);
        if (!b.integer_coeffs()) return {false, b};
      }
      return {};
  }
  throw internal_error("int_equals_MX: bad kind");
}

}  // namespace ivpoly
