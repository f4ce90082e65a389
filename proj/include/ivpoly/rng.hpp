#pragma once
/* Deterministic random generation for the property suites. All draws go
 * through the modulo path below so a fixed seed reproduces the same corpus
 * on every platform (no reliance on std::uniform_int_distribution, whose
 * output is implementation-defined). */

#include <cstdint>
#include <random>
#include <vector>

#include "ivpoly/poly.hpp"

namespace ivpoly {

inline constexpr std::uint64_t kDefaultSeed = 20260816ULL;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /* Inclusive range; modulo bias is irrelevant at these spans. */
  long range(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::range: empty range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  Int int_in(long lo, long hi) { return Int(range(lo, hi)); }

  /* Numerator in [-num_max, num_max], denominator from the pool. */
  Rat rat(long num_max, const std::vector<long>& dens) {
    long d = dens[static_cast<std::size_t>(range(0, static_cast<long>(dens.size()) - 1))];
    return make_rat(Int(range(-num_max, num_max)), Int(d));
  }

 private:
  std::mt19937_64 eng_;
};

/* Monomial-coefficient polynomial; degree at most max_deg (sparser when
 * coefficients draw zero). */
inline Poly random_poly(Rng& rng, int max_deg, long num_max,
                        const std::vector<long>& dens) {
  std::vector<Rat> c;
  int d = static_cast<int>(rng.range(0, max_deg));
  for (int k = 0; k <= d; ++k) c.push_back(rng.rat(num_max, dens));
  return Poly(std::move(c));
}

/* Integer combination of binomial polynomials: a guaranteed member of the
 * integer-valued ring. */
inline Poly random_int_valued(Rng& rng, int max_deg, long num_max) {
  Poly f;
  int d = static_cast<int>(rng.range(0, max_deg));
  for (int k = 0; k <= d; ++k)
    f = f + binomial_poly(static_cast<std::size_t>(k)) *
                Rat(rng.int_in(-num_max, num_max));
  return f;
}

}  // namespace ivpoly
