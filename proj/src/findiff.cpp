#include "ivpoly/findiff.hpp"

#include <stdexcept>

#include "ivpoly/numeric.hpp"

namespace ivpoly {

MultiPoly delta(const Poly& f) {
  // (X+Y)^k - X^k = sum_{j<k} C(k,j) X^j Y^(k-j), so dividing by Y drops
  // one power of Y from every term.
  MultiPoly g(2);
  int d = f.degree();
  for (int k = 1; k <= d; ++k) {
    const Rat& c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    for (int j = 0; j < k; ++j) {
      Rat w = c * Rat(binomial(Int(k), static_cast<unsigned long>(j)));
      g.add_term({static_cast<unsigned>(j), static_cast<unsigned>(k - 1 - j)},
                 w);
    }
  }
  return g;
}

Poly delta_at(const Poly& f, const Rat& y) {
  MultiPoly g = delta(f);
  return g.eval_var(1, y).to_poly(0);
}

MultiPoly delta_poly_arg(const Poly& f, const MultiPoly& first,
                         const MultiPoly& disp) {
  if (first.nvars() != disp.nvars())
    throw std::invalid_argument("delta_poly_arg: arity mismatch");
  return delta(f).substitute_all({first, disp});
}

MultiPoly delta_displaced(const MultiPoly& P, std::size_t var, const Int& u) {
  if (var >= P.nvars())
    throw std::invalid_argument("delta_displaced: no such variable");
  std::size_t n = P.nvars();
  MultiPoly out(n + 1);
  for (const auto& [key, c] : P.terms()) {
    unsigned e = key[var];
    if (e == 0) continue;  // constants in `var` cancel in the difference
    MultiPoly::Key nk(key.begin(), key.end());
    nk.push_back(0);
    Int upow = 1;  // u^(e-1-j), built from j = e-1 downward
    for (unsigned j = e; j-- > 0;) {
      Rat w = c * Rat(binomial(Int(e), static_cast<unsigned long>(j)) * upow);
      nk[var] = j;
      nk[n] = e - j;
      out.add_term(nk, w);
      upow *= u;
    }
  }
  return out;
}

}  // namespace ivpoly
