#include "ivpoly/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ivpoly/findiff.hpp"
#include "ivpoly/idealization.hpp"
#include "ivpoly/lattices.hpp"
#include "ivpoly/membership.hpp"
#include "ivpoly/multipoly.hpp"
#include "ivpoly/ringext.hpp"
#include "ivpoly/rng.hpp"
#include "ivpoly/torsion.hpp"

namespace ivpoly {

namespace {

CheckResult ok(std::string id, std::string note) {
  return {std::move(id), true, std::move(note)};
}
CheckResult bad(std::string id, std::string note) {
  return {std::move(id), false, std::move(note)};
}

/* ---------- core ---------- */

CheckResult check_binom_roundtrip(std::uint64_t seed) {
  const char* id = "core.binom-roundtrip";
  Rng rng(seed);
  const std::vector<long> dens{1, 2, 3, 4, 6, 12};
  for (int i = 0; i < 1000; ++i) {
    Poly f = random_poly(rng, 12, 20, dens);
    if (from_binomial(to_binomial(f)) != f)
      return bad(id, "monomial round-trip broke on " + f.to_string());
    std::vector<Rat> bc;
    for (int k = 0, d = static_cast<int>(rng.range(0, 12)); k <= d; ++k)
      bc.push_back(rng.rat(20, dens));
    BinomPoly b(bc);
    if (to_binomial(from_binomial(b)) != b)
      return bad(id, "binomial round-trip broke on " + b.to_string());
  }
  return ok(id, "1000 round-trips in each direction, degree <= 12");
}

CheckResult check_member_vs_eval(std::uint64_t seed) {
  const char* id = "core.member-vs-eval";
  Rng rng(seed);
  int members = 0;
  for (int i = 0; i < 500; ++i) {
    Poly f = (i % 5 < 2) ? random_int_valued(rng, 12, 10)
                         : random_poly(rng, 12, 10, {1, 2, 3, 6});
    auto v = in_int(f);
    bool oracle = true;
    for (int x = 0; x <= std::max(f.degree(), 0); ++x)
      if (!is_integer(f.eval(Rat(x)))) {
        oracle = false;
        break;
      }
    if (v.member != oracle)
      return bad(id, "verdict disagrees with evaluation at {0..deg} on " +
                         f.to_string());
    if (!v.member && !witness_falsifies(f, v.witness))
      return bad(id, "witness fails to replay on " + f.to_string());
    members += v.member;
  }
  return ok(id, "500 candidates (" + std::to_string(members) +
                    " members) against exhaustive evaluation");
}

CheckResult check_hnf(std::uint64_t seed) {
  const char* id = "core.hnf";
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    std::size_t r = static_cast<std::size_t>(rng.range(1, 6));
    std::size_t c = static_cast<std::size_t>(rng.range(1, 6));
    IMatrix A(r, c);
    for (std::size_t ri = 0; ri < r; ++ri)
      for (std::size_t ci = 0; ci < c; ++ci) A.at(ri, ci) = rng.int_in(-9, 9);
    IMatrix H = hnf(A);
    if (hnf(H) != H) return bad(id, "HNF is not idempotent");
    if (!lattice_equal(A, H)) return bad(id, "HNF changed the row span");
    long prev = -1;
    for (std::size_t ri = 0; ri < H.rows(); ++ri) {
      long pc = pivot_column(H, ri);
      if (pc <= prev) return bad(id, "pivot columns not increasing");
      prev = pc;
      const Int& piv = H.at(ri, static_cast<std::size_t>(pc));
      if (piv <= 0) return bad(id, "pivot not positive");
      for (std::size_t rj = ri + 1; rj < H.rows(); ++rj) {
        const Int& e = H.at(rj, static_cast<std::size_t>(pc));
        if (e < 0 || e >= piv) return bad(id, "entry below pivot not reduced");
      }
    }
  }
  /* Congruence kernels: basis rows satisfy the congruences and random
   * vectors are contained iff they satisfy them. */
  for (int i = 0; i < 60; ++i) {
    std::size_t r = static_cast<std::size_t>(rng.range(1, 3));
    std::size_t c = static_cast<std::size_t>(rng.range(1, 4));
    IMatrix A(r, c);
    for (std::size_t ri = 0; ri < r; ++ri)
      for (std::size_t ci = 0; ci < c; ++ci) A.at(ri, ci) = rng.int_in(-5, 5);
    std::vector<Int> mods;
    const long pool[4] = {0, 1, 2, 4};
    for (std::size_t ri = 0; ri < r; ++ri)
      mods.push_back(Int(pool[rng.range(0, 3)]));
    IMatrix basis = congruence_lattice_basis(A, mods);
    auto satisfies = [&](const std::vector<Int>& v) {
      for (std::size_t ri = 0; ri < r; ++ri) {
        Int s = 0;
        for (std::size_t ci = 0; ci < c; ++ci) s += A.at(ri, ci) * v[ci];
        if (mods[ri] == 0 ? s != 0 : mod_floor(s, mods[ri]) != 0) return false;
      }
      return true;
    };
    for (std::size_t ri = 0; ri < basis.rows(); ++ri)
      if (!satisfies(basis.row(ri)))
        return bad(id, "kernel basis row violates its congruences");
    for (int t = 0; t < 20; ++t) {
      std::vector<Int> v;
      for (std::size_t ci = 0; ci < c; ++ci) v.push_back(rng.int_in(-6, 6));
      if (satisfies(v) != lattice_contains(basis, v))
        return bad(id, "containment disagrees with the congruences");
    }
  }
  return ok(id, "100 canonical-form audits, 60 congruence kernels");
}

CheckResult check_parse_roundtrip(std::uint64_t seed) {
  const char* id = "core.parse-roundtrip";
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    Poly f = random_poly(rng, 9, 12, {1, 2, 3, 4});
    if (parse_poly(f.to_string()) != f)
      return bad(id, "poly text round-trip broke on " + f.to_string());
    BinomPoly b = to_binomial(f);
    if (parse_poly(b.to_string()) != f)
      return bad(id, "binomial text round-trip broke on " + b.to_string());
  }
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
    RelationVector rel;
    rel.r.clear();
    for (std::size_t j = 0; j < n; ++j) rel.r.push_back(rng.int_in(-3, 3));
    GenDualPoly F(rel);
    for (Mask s = 0; s < (Mask(1) << n); ++s)
      if (rng.range(0, 1)) F.set_component(s, random_poly(rng, 4, 6, {1, 2}));
    if (parse_gen_dual_poly(F.to_string(), rel) != F)
      return bad(id, "generator text round-trip broke on " + F.to_string());
  }
  for (int i = 0; i < 100; ++i) {
    ModuleSpec spec = i % 3 == 0   ? ModuleSpec::free_zn(2)
                      : i % 3 == 1 ? ModuleSpec::zmod(4)
                                   : ModuleSpec::rationals();
    IdealPoly F;
    F.f = random_poly(rng, 4, 6, {1, 2, 3});
    for (std::size_t s = 0; s < spec.slots(); ++s)
      F.h.push_back(i % 3 == 1 ? Poly(std::vector<Rat>{Rat(rng.int_in(0, 3)),
                                                       Rat(rng.int_in(0, 3))})
                               : random_poly(rng, 4, 6, {1, 2}));
    auto [G, got] = parse_ideal_poly(F.to_string() + " over " + spec.to_string());
    if (!got || !(*got == spec) || G.f != F.f || G.h != F.h)
      return bad(id, "idealization text round-trip broke on " + F.to_string());
  }
  return ok(id, "500 text round-trips across the three syntaxes");
}

CheckResult check_multivar_grid(std::uint64_t seed) {
  const char* id = "core.multivar-grid";
  Rng rng(seed);
  for (int i = 0; i < 150; ++i) {
    std::size_t nv = static_cast<std::size_t>(rng.range(2, 3));
    MultiPoly f(nv);
    int terms = static_cast<int>(rng.range(1, 6));
    for (int t = 0; t < terms; ++t) {
      MultiPoly::Key k(nv, 0);
      for (std::size_t v = 0; v < nv; ++v)
        k[v] = static_cast<unsigned>(rng.range(0, 3));
      f.add_term(k, rng.rat(6, {1, 2, 3, 6}));
    }
    bool sym = integer_valued_on_lattice(f);
    bool grid = true;
    std::vector<unsigned> lim(nv);
    for (std::size_t v = 0; v < nv; ++v) lim[v] = f.degree_in(v);
    std::vector<unsigned> pt(nv, 0);
    for (;;) {
      std::vector<Rat> q;
      for (unsigned e : pt) q.push_back(Rat(e));
      if (!is_integer(f.eval(q))) {
        grid = false;
        break;
      }
      std::size_t v = 0;
      while (v < nv && pt[v] == lim[v]) pt[v++] = 0;
      if (v == nv) break;
      ++pt[v];
    }
    if (sym != grid)
      return bad(id, "symbolic verdict disagrees with the grid");
    if (!sym) {
      auto idx = non_integral_index(f);
      if (!idx) return bad(id, "negative verdict without an index");
      std::vector<Rat> q;
      for (unsigned e : *idx) q.push_back(Rat(e));
      if (is_integer(f.eval(q)))
        return bad(id, "witness index evaluates to an integer");
    }
  }
  return ok(id, "150 multivariate candidates, box oracle and witness replay");
}

/* ---------- closed evaluation over square-zero generators ---------- */

GenDualPoly random_dual_poly(Rng& rng, const RelationVector& rel, int max_deg,
                             bool member_bias) {
  GenDualPoly F(rel);
  std::size_t n = rel.n();
  for (Mask s = 0; s < (Mask(1) << n); ++s) {
    long roll = rng.range(0, 3);
    if (roll == 0) continue;
    F.set_component(s, member_bias && roll == 1
                           ? random_int_valued(rng, max_deg, 5)
                           : random_poly(rng, max_deg, 5, {1, 2, 3}));
  }
  return F;
}

GenDualElem random_dual_elem(Rng& rng, const RelationVector& rel,
                             bool sparse) {
  GenDualElem z(rel);
  std::size_t n = rel.n();
  for (Mask s = 0; s < (Mask(1) << n); ++s) {
    if (sparse && s && rng.range(0, 2) == 0) continue;
    z.set_coeff(s, rng.rat(4, {1, 2, 3}));
  }
  return z;
}

CheckResult check_closed_vs_direct(std::uint64_t seed) {
  const char* id = "s2.closed-vs-direct";
  Rng rng(seed);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
    RelationVector rel;
    rel.r.assign(n, Int(0));
    GenDualPoly F = random_dual_poly(rng, rel, 5, false);
    GenDualElem z = random_dual_elem(rng, rel, true);
    if (eval_closed_dual(F, z) != eval_direct(F, z))
      return bad(id, "closed form differs from Horner on " + F.to_string());
  }
  for (int i = 0; i < 100; ++i) {
    RelationVector rel;
    rel.r = {rng.int_in(-3, 3)};
    GenDualPoly F = random_dual_poly(rng, rel, 5, false);
    GenDualElem z = random_dual_elem(rng, rel, false);
    if (eval_closed_rho(F, z) != eval_direct(F, z))
      return bad(id, "single-generator closed form differs from Horner");
  }
  return ok(id, "500 square-zero and 100 single-generator evaluations");
}

CheckResult check_bell_counts(std::uint64_t) {
  const char* id = "s2.bell-counts";
  auto bell = bell_numbers(6);
  for (std::size_t n = 1; n <= 4; ++n) {
    if (term_count_point_form(n) != bell[n + 1])
      return bad(id, "point-form count off at n=" + std::to_string(n));
    if (term_count_component_form(n) != bell[n + 2] - bell[n + 1])
      return bad(id, "component-form count off at n=" + std::to_string(n));
  }
  /* Partition enumeration sanity behind the counts. */
  if (set_partitions({0, 1, 2}).size() != 5)
    return bad(id, "three-element partition count is not 5");
  return ok(id, "term counts match the Bell pattern for n <= 4");
}

CheckResult check_ext_vs_dense(std::uint64_t seed) {
  const char* id = "s2.ext-vs-dense";
  Rng rng(seed);
  int members = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    RelationVector rel;
    rel.r.assign(n, Int(0));
    for (int i = 0; i < 200; ++i) {
      GenDualPoly F = random_dual_poly(rng, rel, 4, true);
      unsigned D = static_cast<unsigned>(std::max(F.degree(), 0));
      auto v = in_int_ext(F);
      auto d = dense_set_oracle(F, D);
      if (v.member != d.ok)
        return bad(id, "membership and dense evaluation disagree on " +
                           F.to_string());
      if (!v.member && v.witness.kind == WitnessKind::none)
        return bad(id, "negative verdict without witness");
      members += v.member;
    }
  }
  return ok(id, "600 candidates across ranks 1..3 (" +
                    std::to_string(members) + " members)");
}

CheckResult check_homomorphism(std::uint64_t seed) {
  const char* id = "s2.homomorphism";
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
    RelationVector rel;
    rel.r.clear();
    for (std::size_t j = 0; j < n; ++j) rel.r.push_back(rng.int_in(-3, 3));
    GenDualElem z = random_dual_elem(rng, rel, true);
    GenDualElem w = random_dual_elem(rng, rel, true);
    GenDualElem v = random_dual_elem(rng, rel, true);
    if ((z + w) * v != z * v + w * v) return bad(id, "distributivity broke");
    if ((z * w) * v != z * (w * v)) return bad(id, "associativity broke");
    if (z * w != w * z) return bad(id, "commutativity broke");
    GenDualPoly F = random_dual_poly(rng, rel, 3, false);
    GenDualPoly G = random_dual_poly(rng, rel, 3, false);
    if (eval_direct(F * G, z) != eval_direct(F, z) * eval_direct(G, z))
      return bad(id, "evaluation does not respect products");
    if (eval_direct(F + G, z) != eval_direct(F, z) + eval_direct(G, z))
      return bad(id, "evaluation does not respect sums");
  }
  return ok(id, "200 ring-law and evaluation-map instances");
}

CheckResult check_conj_norm(std::uint64_t seed) {
  const char* id = "s2.conj-norm";
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    RelationVector rel;
    rel.r = {rng.int_in(-4, 4)};
    GenDualElem z = random_dual_elem(rng, rel, false);
    GenDualElem w = random_dual_elem(rng, rel, false);
    auto [cz, nz] = conj_norm(z);
    auto [cw, nw] = conj_norm(w);
    if (z * cz != GenDualElem::scalar(rel, nz))
      return bad(id, "z * conj(z) is not the norm scalar");
    if (conj_norm(z * w).second != nz * nw)
      return bad(id, "norm is not multiplicative");
    if (is_regular(z) != (nz != 0))
      return bad(id, "regularity disagrees with the norm");
  }
  return ok(id, "200 conjugate/norm instances");
}

/* ---------- difference calculus ---------- */

MultiPoly embed_shifted(const Poly& f) {  // f(X+Y) in variables (X, Y)
  MultiPoly fe = MultiPoly::from_poly(f, 2, 0);
  MultiPoly x = MultiPoly::variable(2, 0);
  MultiPoly y = MultiPoly::variable(2, 1);
  return fe.substitute_all({x + y, y});
}

CheckResult check_delta_laws(std::uint64_t seed) {
  const char* id = "s3.delta-laws";
  Rng rng(seed);
  const std::vector<long> dens{1, 2, 3, 6};
  for (int i = 0; i < 200; ++i) {  // product rule
    Poly f = random_poly(rng, 6, 6, dens);
    Poly g = random_poly(rng, 6, 6, dens);
    MultiPoly lhs = delta(f * g);
    MultiPoly rhs = embed_shifted(f) * delta(g) +
                    delta(f) * MultiPoly::from_poly(g, 2, 0);
    if (lhs != rhs) return bad(id, "product rule broke");
  }
  for (int i = 0; i < 200; ++i) {  // chain rule
    Poly f = random_poly(rng, 4, 4, dens);
    Poly g = random_poly(rng, 4, 4, dens);
    MultiPoly gX = MultiPoly::from_poly(g, 2, 0);
    MultiPoly disp = embed_shifted(g) - gX;
    MultiPoly lhs = delta(f.compose(g));
    MultiPoly rhs = delta_poly_arg(f, gX, disp) * delta(g);
    if (lhs != rhs) return bad(id, "chain rule broke");
  }
  auto quotient = [](const Poly& f, const Rat& c) {
    return (f.shifted(c) - f) / c;
  };
  for (int i = 0; i < 200; ++i) {  // commutation, numeric and symbolic
    Poly f = random_poly(rng, 6, 6, dens);
    Rat a(rng.int_in(1, 5)), b(-rng.int_in(1, 5));
    if (quotient(quotient(f, a), b) != quotient(quotient(f, b), a))
      return bad(id, "numeric commutation broke");
    MultiPoly base = MultiPoly::from_poly(f, 1, 0);
    Int u1 = rng.int_in(-3, 3), u2 = rng.int_in(-3, 3);
    MultiPoly p12 = delta_displaced(delta_displaced(base, 0, u1), 0, u2);
    MultiPoly p21 = delta_displaced(delta_displaced(base, 0, u2), 0, u1);
    if (p12 != p21.swap_vars(1, 2)) return bad(id, "symbolic commutation broke");
  }
  for (int i = 0; i < 100; ++i) {  // base cases of the bivariate operator
    Poly f = random_poly(rng, 6, 6, dens);
    if (delta_at(f, Rat(0)) != f.derivative())
      return bad(id, "zero-displacement limit is not the derivative");
    Rat y = rng.rat(4, {1, 2});
    if (y != 0 && delta_at(f, y) != quotient(f, y))
      return bad(id, "concrete displacement differs from the quotient");
  }
  return ok(id, "product, chain, and commutation laws, 200 instances each");
}

CheckResult check_multiset_vs_mod(std::uint64_t seed) {
  const char* id = "s3.multiset-vs-mod";
  Rng rng(seed);
  const std::vector<long> dens{1, 2, 3, 4, 6, 8, 12};
  int members = 0;
  for (long r : {2L, 3L, 4L, 6L}) {
    for (int i = 0; i < 300; ++i) {
      Poly f;
      long roll = rng.range(0, 2);
      if (roll == 0) f = random_int_valued(rng, 8, 8);
      else if (roll == 1) f = random_poly(rng, 8, 8, dens);
      else {
        IntLattice L = basis_int_mod(Int(r), 8);
        f = L.row_poly(static_cast<std::size_t>(
            rng.range(0, static_cast<long>(L.basis.rows()) - 1)));
      }
      auto a = in_int_multiset(f, {Int(r)});
      auto b = in_int_mod(f, Int(r));
      if (a.member != b.member)
        return bad(id, "multiset {r} differs from the congruence test, r=" +
                           std::to_string(r) + " on " + f.to_string());
      if (!a.member && !witness_falsifies(f, a.witness))
        return bad(id, "multiset witness fails to replay");
      if (!b.member && !witness_falsifies(f, b.witness))
        return bad(id, "congruence witness fails to replay");
      members += a.member;
    }
  }
  return ok(id, "1200 candidates across r in {2,3,4,6} (" +
                    std::to_string(members) + " members)");
}

CheckResult check_multiset_degenerate(std::uint64_t seed) {
  const char* id = "s3.multiset-degenerate";
  Rng rng(seed);
  const std::vector<long> dens{1, 2, 3, 4, 6};
  for (int i = 0; i < 150; ++i) {
    Poly f = (i % 2) ? random_int_valued(rng, 6, 6)
                     : random_poly(rng, 6, 6, dens);
    if (in_int_multiset(f, {}).member != in_int(f).member)
      return bad(id, "empty multiset differs from plain membership");
    if (in_int_multiset(f, {Int(0)}).member != in_int_k(f, 1).member)
      return bad(id, "{0} differs from the first derivative ring");
    if (in_int_multiset(f, {Int(0), Int(0)}).member != in_int_k(f, 2).member)
      return bad(id, "{0,0} differs from the second derivative ring");
    if (in_int_multiset(f, {Int(1)}).member != in_int(f).member)
      return bad(id, "unit entry failed to collapse");
    if (in_int_multiset(f, {Int(3)}).member !=
        in_int_multiset(f, {Int(-3)}).member)
      return bad(id, "sign of a multiset entry mattered");
    for (std::vector<Int> S :
         {std::vector<Int>{Int(2), Int(0)}, std::vector<Int>{Int(2), Int(3)},
          std::vector<Int>{Int(2), Int(2)}}) {
      auto whole = in_int_multiset(f, S);
      if (!whole.member) {
        if (!witness_falsifies(f, whole.witness))
          return bad(id, "multiset witness fails to replay");
        continue;
      }
      for (std::size_t drop = 0; drop < S.size(); ++drop) {
        std::vector<Int> T;
        for (std::size_t j = 0; j < S.size(); ++j)
          if (j != drop) T.push_back(S[j]);
        if (!in_int_multiset(f, T).member)
          return bad(id, "membership not monotone under removing an entry");
      }
    }
  }
  return ok(id, "150 candidates through the degenerate and nested cases");
}

CheckResult check_worked_bases(std::uint64_t) {
  const char* id = "s3.worked-bases";
  {
    IntLattice L = basis_int_mod(2, 8);
    IMatrix raw(0, 9);
    for (unsigned j = 0; j <= 8; ++j) {
      BinomPoly b = to_binomial(Poly::monomial(j, 1));
      std::vector<Int> row(9, Int(0));
      for (unsigned k = 0; k <= 8; ++k) {
        Rat c = b.coeff(k);
        if (!is_integer(c)) return bad(id, "monomial with fractional binomial coordinate");
        row[k] = c.get_num();
      }
      raw.append_row(row);
    }
    for (unsigned k = 0; k <= 8; ++k) {
      std::vector<Int> row(9, Int(0));
      row[k] = 2;
      raw.append_row(row);
    }
    if (!lattice_equal(L.basis, raw))
      return bad(id, "modulus-2 basis differs from the X^j + doubled lattice");
  }
  for (long p : {2L, 3L, 5L}) {
    IntLattice L = basis_int_mod(Int(p), 10);
    if (L.basis.rows() != 11) return bad(id, "modulus basis not full rank");
    for (unsigned k = 0; k <= 10; ++k) {
      if (pivot_column(L.basis, k) != static_cast<long>(k))
        return bad(id, "modulus basis pivot off the diagonal");
      /* C(X,k) is a member exactly for k < p: the step p in C(X,p) lands on
       * C(p,p)/p = 1/p, so f(p) - f(0) = 1 breaks the congruence. */
      Int want = static_cast<long>(k) < p ? 1 : p;
      if (L.basis.at(k, k) != want)
        return bad(id, "pivot pattern broke at p=" + std::to_string(p) +
                           ", k=" + std::to_string(k));
    }
    if (in_int_mod(binomial_poly(static_cast<std::size_t>(p)), Int(p)).member)
      return bad(id, "C(X,p) passed the congruence test at p=" +
                         std::to_string(p));
    if (!in_int_mod(binomial_poly(static_cast<std::size_t>(p - 1)), Int(p))
             .member)
      return bad(id, "C(X,p-1) failed the congruence test at p=" +
                         std::to_string(p));
  }
  {
    IntLattice one = basis_int_mod(1, 4);
    for (unsigned k = 0; k <= 4; ++k)
      if (one.basis.at(k, k) != 1) return bad(id, "modulus 1 is not identity");
    if (!lattice_equal(basis_int_mod(-3, 6).basis, basis_int_mod(3, 6).basis))
      return bad(id, "modulus sign mattered");
    IntLattice three = basis_int_mod(3, 6);
    std::vector<long> want{1, 1, 1, 3, 3, 3, 3};
    for (unsigned k = 0; k <= 6; ++k)
      if (three.basis.at(k, k) != want[k])
        return bad(id, "modulus-3 pivot sequence broke");
  }
  return ok(id, "worked modulus bases and pivot patterns reproduced");
}

CheckResult check_basis_int_k(std::uint64_t seed) {
  const char* id = "s3.basis-int-k";
  Rng rng(seed);
  {
    IntLattice L = basis_int_k(1, 2);
    Poly twice = from_binomial(BinomPoly({Rat(0), Rat(0), Rat(2)}));
    if (!L.contains(twice) || L.contains(binomial_poly(2)))
      return bad(id, "k=1 degree-2 lattice misses the doubled coordinate");
  }
  for (unsigned k : {1u, 2u}) {
    IntLattice L = basis_int_k(k, 6);
    for (std::size_t i = 0; i < L.basis.rows(); ++i)
      if (!in_int_k(L.row_poly(i), k).member)
        return bad(id, "basis row escapes the derivative ring");
    for (int t = 0; t < 100; ++t) {
      Poly f = (t % 2) ? random_int_valued(rng, 6, 6)
                       : random_poly(rng, 6, 6, {1, 2, 3, 6});
      if (L.contains(f) != in_int_k(f, k).member)
        return bad(id, "lattice containment disagrees with membership, k=" +
                           std::to_string(k));
    }
  }
  if (!lattice_equal(basis_int_k(0, 5).basis, basis_int_mod(1, 5).basis))
    return bad(id, "k=0 is not the full integer-valued lattice");
  return ok(id, "derivative-ring bases audited at k in {0,1,2}");
}

CheckResult check_mod4_conjecture(std::uint64_t) {
  const char* id = "s3.mod4-conjecture";
  ConjectureReport a = conjecture_check_mod4(12);
  ConjectureReport b = conjecture_check_mod4(12);
  if (a.to_string() != b.to_string())
    return bad(id, "report is not deterministic");
  if (!a.generators_are_members)
    return bad(id, "a conjectured generator fails the congruence test");
  if (!a.in_conjectured_only.empty())
    return bad(id, "conjectured lattice escapes the computed one");
  return ok(id, "degree 12, verdict " + to_string(a.verdict));
}

CheckResult check_pullback(std::uint64_t seed) {
  const char* id = "s3.pullback";
  Rng rng(seed);
  int members = 0;
  for (long r : {2L, 3L, 4L}) {
    RelationVector rel;
    rel.r = {Int(r)};
    for (int i = 0; i < 200; ++i) {
      GenDualPoly F = random_dual_poly(rng, rel, 5, true);
      auto v = in_int_ext(F);
      auto pb = pullback_iso(F);
      if (pb.fiber_ok != v.member)
        return bad(id, "fiber condition differs from membership at r=" +
                           std::to_string(r));
      members += v.member;
    }
  }
  return ok(id, "600 candidates across r in {2,3,4} (" +
                    std::to_string(members) + " members)");
}

/* ---------- idealization ---------- */

ModuleSpec random_module(Rng& rng, int which) {
  switch (which % 3) {
    case 0:
      return ModuleSpec::free_zn(static_cast<std::size_t>(rng.range(1, 3)));
    case 1: {
      const long ms[5] = {2, 3, 4, 5, 9};
      return ModuleSpec::zmod(Int(ms[rng.range(0, 4)]));
    }
    default:
      return ModuleSpec::rationals();
  }
}

IdealPoly random_ideal_poly(Rng& rng, const ModuleSpec& spec, int max_deg) {
  std::vector<long> dens{1, 2, 3, 5};
  if (spec.kind == ModuleSpec::Kind::ZmodM) {
    dens.clear();
    for (long d : {1L, 2L, 3L, 5L, 7L})
      if (gcd(Int(d), spec.m) == 1) dens.push_back(d);
  }
  IdealPoly F;
  F.f = random_poly(rng, max_deg, 6, dens);
  for (std::size_t s = 0; s < spec.slots(); ++s)
    F.h.push_back(spec.kind == ModuleSpec::Kind::ZmodM
                      ? Poly(std::vector<Rat>{Rat(rng.int_in(0, 3)),
                                              Rat(rng.int_in(0, 3)),
                                              Rat(rng.int_in(0, 3))})
                      : random_poly(rng, max_deg, 6, {1, 2, 3}));
  return F;
}

IdealElem random_ideal_elem(Rng& rng, const ModuleSpec& spec) {
  IdealElem z;
  z.x = spec.kind == ModuleSpec::Kind::ZmodM
            ? Rat(rng.int_in(-6, 6))
            : rng.rat(5, {1, 2, 3});
  z.m = module_zero(spec);
  for (Rat& c : z.m.v)
    c = spec.kind == ModuleSpec::Kind::ZmodM
            ? Rat(mod_floor(rng.int_in(0, 20), spec.m))
            : rng.rat(5, {1, 2});
  if (spec.kind == ModuleSpec::Kind::FreeZn)
    for (Rat& c : z.m.v) c = Rat(rng.int_in(-4, 4));
  return z;
}

CheckResult check_ideal_eval_horner(std::uint64_t seed) {
  const char* id = "s4.ideal-eval-horner";
  Rng rng(seed);
  for (int kind = 0; kind < 3; ++kind) {
    for (int i = 0; i < 300; ++i) {
      ModuleSpec spec = random_module(rng, kind);
      IdealPoly F = random_ideal_poly(rng, spec, 5);
      IdealElem z = random_ideal_elem(rng, spec);
      if (!(ideal_eval(spec, F, z) == ideal_eval_horner(spec, F, z)))
        return bad(id, "closed evaluation differs from Horner over " +
                           spec.to_string() + " on " + F.to_string());
    }
  }
  return ok(id, "300 evaluations per module kind agree on both paths");
}

CheckResult check_idealization_vs_ext(std::uint64_t seed) {
  const char* id = "s4.idealization-vs-ext";
  Rng rng(seed);
  ModuleSpec z1 = ModuleSpec::free_zn(1);
  RelationVector rel{{Int(0)}};
  int members = 0;
  for (int i = 0; i < 300; ++i) {
    IdealPoly F;
    F.f = (i % 2) ? random_int_valued(rng, 5, 5)
                  : random_poly(rng, 5, 5, {1, 2, 3});
    F.h = {(i % 3) ? random_int_valued(rng, 5, 5)
                   : random_poly(rng, 5, 5, {1, 2, 3})};
    GenDualPoly G(rel);
    G.set_component(0, F.f);
    G.set_component(1, F.h[0]);
    bool a = in_int_idealization(z1, F, 0).member;
    bool b = in_int_ext(G).member;
    if (a != b)
      return bad(id, "membership differs across the bijection on " +
                         F.to_string());
    members += a;
    for (int t = 0; t < 3; ++t) {
      IdealElem z = random_ideal_elem(rng, z1);
      GenDualElem zg(rel);
      zg.set_coeff(0, z.x);
      zg.set_coeff(1, z.m.v[0]);
      IdealElem got = ideal_eval(z1, F, z);
      GenDualElem ref = eval_direct(G, zg);
      if (got.x != ref.coeff(0) || got.m.v[0] != ref.coeff(1))
        return bad(id, "evaluation differs across the bijection");
    }
  }
  return ok(id, "300 membership and 900 evaluation transfers (" +
                    std::to_string(members) + " members)");
}

CheckResult check_corollaries(std::uint64_t) {
  const char* id = "s4.corollaries";
  CorollaryReport rep = canned_corollary_checks();
  if (!rep.all_pass()) {
    for (const auto& row : rep.rows)
      if (!row.pass) return bad(id, "row '" + row.name + "': " + row.note);
  }
  std::string names;
  for (const auto& row : rep.rows)
    names += (names.empty() ? "" : ", ") + row.name;
  return ok(id, std::to_string(rep.rows.size()) + " rows: " + names);
}

CheckResult check_delta_eps_discriminator(std::uint64_t) {
  const char* id = "s4.delta-eps-discriminator";
  RelationVector rel2{{Int(0), Int(0)}};
  ModuleSpec z2 = ModuleSpec::free_zn(2);

  GenDualElem e1 = GenDualElem::generator(rel2, 0);
  GenDualElem e2 = GenDualElem::generator(rel2, 1);
  if ((e1 * e2).is_zero())
    return bad(id, "product of distinct square-zero generators vanished");
  IdealElem d1{Rat(0), ModuleElem{{Rat(1), Rat(0)}}};
  IdealElem d2{Rat(0), ModuleElem{{Rat(0), Rat(1)}}};
  IdealElem p = ideal_mul(z2, d1, d2);
  if (!(p == IdealElem{Rat(0), module_zero(z2)}))
    return bad(id, "module generators failed to annihilate");

  GenDualPoly cross(rel2);
  cross.set_component(3, parse_poly("1/2*X"));
  if (in_int_ext(cross).member)
    return bad(id, "cross-term component escaped the membership test");
  if (!in_int_idealization(z2, IdealPoly{parse_poly("0"), {parse_poly("0"), parse_poly("0")}}, 0)
           .member)
    return bad(id, "collapsed image rejected");

  GenDualPoly slot(rel2);
  slot.set_component(1, binomial_poly(2));
  auto v = in_int_ext(slot);
  if (v.member)
    return bad(id, "single-slot candidate should need an integral derivative");
  if (!in_int_idealization(z2, IdealPoly{parse_poly("0"), {binomial_poly(2), parse_poly("0")}}, 0)
           .member)
    return bad(id, "free-module image should absorb the derivative condition");
  return ok(id, "generator products and membership separate the two rings");
}

/* ---------- torsion ---------- */

CheckResult check_vanishing(std::uint64_t) {
  const char* id = "s5.vanishing";
  for (long q : {2L, 3L, 5L}) {
    auto s = vanishing_ideal(FiniteRingSpec::zmod(q), static_cast<unsigned>(q));
    IMatrix want(0, static_cast<std::size_t>(q) + 1);
    std::vector<Int> g(static_cast<std::size_t>(q) + 1, Int(0));
    g[1] = -1;
    g[static_cast<std::size_t>(q)] += 1;
    want.append_row(g);
    for (long k = 0; k <= q; ++k) {
      std::vector<Int> row(static_cast<std::size_t>(q) + 1, Int(0));
      row[static_cast<std::size_t>(k)] = q;
      want.append_row(row);
    }
    if (!lattice_equal(s.factor_basis[0], want))
      return bad(id, "field slice is not the span of X^q - X at q=" +
                         std::to_string(q));
  }
  for (auto R : {FiniteRingSpec::zmod(4), FiniteRingSpec::zmod(6),
                 FiniteRingSpec::zmod(9), FiniteRingSpec::zmod(8),
                 FiniteRingSpec::product({Int(2), Int(3)})}) {
    long n0 = R.size().get_si();
    for (unsigned D : {static_cast<unsigned>(n0), static_cast<unsigned>(n0) + 2}) {
      auto s = vanishing_ideal(R, D);
      for (std::size_t j = 0; j < s.factor_basis.size(); ++j) {
        const Int& nj = R.ns[j];
        for (std::size_t i = 0; i < s.factor_basis[j].rows(); ++i) {
          const auto& row = s.factor_basis[j].row(i);
          for (Int a = 0; a < nj; ++a) {
            Int val = 0, pw = 1;
            for (const Int& c : row) {
              val += c * pw;
              pw *= a;
            }
            if (mod_floor(val, nj) != 0)
              return bad(id, "kernel row fails to vanish over " + R.to_string());
          }
        }
      }
    }
  }
  {
    auto s4 = vanishing_ideal(FiniteRingSpec::zmod(4), 4);
    if (!lattice_contains(s4.factor_basis[0],
                          {Int(0), Int(-2), Int(2), Int(0), Int(0)}))
      return bad(id, "doubled falling square missing from the Z/4 slice");
    if (!lattice_contains(s4.factor_basis[0],
                          {Int(0), Int(0), Int(-1), Int(0), Int(1)}))
      return bad(id, "X^4 - X^2 missing from the Z/4 slice");
  }
  for (long n : {2L, 5L, 6L})
    if (!vanishing_ideal(FiniteRingSpec::zmod(n), 0).is_zero_slice())
      return bad(id, "degree-0 slice not zero");
  for (long n = 2; n <= 8; ++n) {
    auto R = FiniteRingSpec::zmod(n);
    auto s = vanishing_ideal(R, static_cast<unsigned>(n) - 1);
    if (s.slice_order() * poly_function_count(R) != ipow(Int(n), static_cast<unsigned long>(n)))
      return bad(id, "rank-nullity identity broke at n=" + std::to_string(n));
  }
  return ok(id, "field generators, kernel replay, and rank-nullity verified");
}

CheckResult check_gilmer(std::uint64_t) {
  const char* id = "s5.gilmer";
  for (long n = 2; n <= 30; ++n) {
    auto R = FiniteRingSpec::zmod(n);
    bool principal;
    try {
      principal = is_principal_slicewise(R, static_cast<unsigned>(n));
    } catch (const internal_error& e) {
      return bad(id, "refutation premise failed at n=" + std::to_string(n) +
                         ": " + e.what());
    }
    if (principal != R.is_reduced())
      return bad(id, "principality differs from reducedness at n=" +
                         std::to_string(n));
  }
  if (!is_principal_slicewise(FiniteRingSpec::product({Int(2), Int(3)}), 6))
    return bad(id, "reduced product ring reported non-principal");
  if (is_principal_slicewise(FiniteRingSpec::product({Int(2), Int(4)}), 8))
    return bad(id, "non-reduced product ring reported principal");
  return ok(id, "agrees with reducedness for n <= 30 and product rings");
}

CheckResult check_counts(std::uint64_t) {
  const char* id = "s5.counts";
  for (long n = 2; n <= 12; ++n) {
    auto R = FiniteRingSpec::zmod(n);
    if (poly_function_count(R) != poly_function_count_formula(R))
      return bad(id, "kernel path differs from the arithmetic product at n=" +
                         std::to_string(n));
  }
  for (long n = 2; n <= 5; ++n) {  // third path: brute-force function tables
    std::set<std::vector<long>> tables;
    std::vector<long> coef(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<long> table;
      for (long a = 0; a < n; ++a) {
        long v = 0, pw = 1;
        for (long c : coef) {
          v = (v + c * pw) % n;
          pw = (pw * a) % n;
        }
        table.push_back(((v % n) + n) % n);
      }
      tables.insert(table);
      std::size_t i = 0;
      while (i < coef.size() && coef[i] == n - 1) coef[i++] = 0;
      if (i == coef.size()) break;
      ++coef[i];
    }
    if (Int(static_cast<long>(tables.size())) !=
        poly_function_count(FiniteRingSpec::zmod(n)))
      return bad(id, "brute-force table count differs at n=" +
                         std::to_string(n));
  }
  if (poly_function_count(FiniteRingSpec::product({Int(2), Int(3)})) !=
      poly_function_count(FiniteRingSpec::zmod(6)))
    return bad(id, "product ring count differs from its single-modulus twin");
  if (poly_function_count(FiniteRingSpec::product({Int(3), Int(4)})) !=
      poly_function_count(FiniteRingSpec::zmod(12)))
    return bad(id, "product ring count differs from its single-modulus twin");
  const std::pair<long, long> anchors[] = {{2, 4}, {3, 27}, {4, 64}};
  for (auto [n, c] : anchors)
    if (poly_function_count(FiniteRingSpec::zmod(n)) != c)
      return bad(id, "anchored count broke at n=" + std::to_string(n));
  return ok(id, "three counting paths agree (n <= 12, brute force n <= 5)");
}

CheckResult check_int_equals_mx(std::uint64_t) {
  const char* id = "s5.int-equals-mx";
  auto r = int_equals_MX(ModuleSpec::free_zn(1), 2);
  if (r.equal) return bad(id, "free module reported coefficient-closed");
  if (r.witness != binomial_poly(2))
    return bad(id, "witness is not the degree-2 binomial polynomial");
  if (!in_int(r.witness).member || r.witness.integer_coeffs())
    return bad(id, "witness does not separate values from coefficients");
  if (!int_equals_MX(ModuleSpec::free_zn(1), 1).equal)
    return bad(id, "degree bound 1 should find no counterexample");
  if (int_equals_MX(ModuleSpec::free_zn(3), 5).equal)
    return bad(id, "higher-rank free module reported coefficient-closed");
  if (!int_equals_MX(ModuleSpec::rationals(), 9).equal)
    return bad(id, "divisible module reported a counterexample");
  if (!int_equals_MX(ModuleSpec::zmod(4), 9).equal)
    return bad(id, "torsion module reported a counterexample");
  return ok(id, "witness C(X,2) separates the free module; Q and Z/4 closed");
}

CheckResult check_submodule_heredity(std::uint64_t) {
  const char* id = "s5.submodule-heredity";
  int nonvacuous = 0;
  const std::pair<long, long> cases[] = {{4, 2}, {6, 2}, {6, 3},
                                         {9, 3}, {8, 2}, {8, 4}};
  for (auto [n, d] : cases) {
    for (unsigned D : {1u, 2u}) {
      auto kernel_order = [&](long modulus) {
        IMatrix A(static_cast<std::size_t>(n), D + 1);
        for (long a = 0; a < n; ++a) {
          Int pw = 1;
          for (unsigned k = 0; k <= D; ++k) {
            A.at(static_cast<std::size_t>(a), k) = pw;
            pw *= a;
          }
        }
        IMatrix basis = congruence_lattice_basis(
            A, std::vector<Int>(static_cast<std::size_t>(n), Int(modulus)));
        Int piv = 1;
        for (std::size_t i = 0; i < basis.rows(); ++i)
          piv *= basis.at(i, static_cast<std::size_t>(pivot_column(basis, i)));
        return Int(ipow(Int(modulus), D + 1) / piv);
      };
      /* Coefficients in the submodule d*(Z/n) are d*g with g over Z/(n/d);
       * the vanishing condition for d*g over Z/n is g == 0 mod n/d. */
      Int whole = kernel_order(n);
      Int sub = kernel_order(n / d);
      if (whole == 1) {
        ++nonvacuous;
        if (sub != 1)
          return bad(id, "submodule gained torsion at n=" + std::to_string(n) +
                             ", d=" + std::to_string(d));
      }
    }
  }
  if (nonvacuous == 0) return bad(id, "no case exercised the implication");
  return ok(id, std::to_string(nonvacuous) +
                    " zero-kernel cases passed heredity");
}

/* ---------- registry ---------- */

struct Check {
  const char* id;
  CheckResult (*fn)(std::uint64_t);
};

const Check kChecks[] = {
    {"core.binom-roundtrip", check_binom_roundtrip},
    {"core.hnf", check_hnf},
    {"core.member-vs-eval", check_member_vs_eval},
    {"core.multivar-grid", check_multivar_grid},
    {"core.parse-roundtrip", check_parse_roundtrip},
    {"s2.bell-counts", check_bell_counts},
    {"s2.closed-vs-direct", check_closed_vs_direct},
    {"s2.conj-norm", check_conj_norm},
    {"s2.ext-vs-dense", check_ext_vs_dense},
    {"s2.homomorphism", check_homomorphism},
    {"s3.basis-int-k", check_basis_int_k},
    {"s3.delta-laws", check_delta_laws},
    {"s3.mod4-conjecture", check_mod4_conjecture},
    {"s3.multiset-degenerate", check_multiset_degenerate},
    {"s3.multiset-vs-mod", check_multiset_vs_mod},
    {"s3.pullback", check_pullback},
    {"s3.worked-bases", check_worked_bases},
    {"s4.corollaries", check_corollaries},
    {"s4.delta-eps-discriminator", check_delta_eps_discriminator},
    {"s4.ideal-eval-horner", check_ideal_eval_horner},
    {"s4.idealization-vs-ext", check_idealization_vs_ext},
    {"s5.counts", check_counts},
    {"s5.gilmer", check_gilmer},
    {"s5.int-equals-mx", check_int_equals_mx},
    {"s5.submodule-heredity", check_submodule_heredity},
    {"s5.vanishing", check_vanishing},
};

std::string suite_prefix(const std::string& suite) {
  if (suite == "all") return "";
  if (suite == "core") return "core.";
  if (suite == "section2") return "s2.";
  if (suite == "section3") return "s3.";
  if (suite == "section4") return "s4.";
  if (suite == "section5") return "s5.";
  throw std::invalid_argument(
      "unknown suite '" + suite +
      "' (expected all, core, or section2..section5)");
}

unsigned thread_cap() {
  unsigned hw = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  const char* env = std::getenv("IVPOLY_THREADS");
  if (!env) return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 64) return hw;
  return static_cast<unsigned>(v);
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

std::string SuiteReport::to_string() const {
  std::ostringstream os;
  for (const CheckResult& r : results)
    os << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  (" << r.note
       << ")\n";
  os << (all_pass() ? "suite passed" : "SUITE FAILED") << ": " << suite
     << ", seed " << seed << "\n";
  return os.str();
}

std::vector<std::string> suite_check_ids(const std::string& suite) {
  std::string prefix = suite_prefix(suite);
  std::vector<std::string> ids;
  for (const Check& c : kChecks)
    if (std::string(c.id).rfind(prefix, 0) == 0) ids.push_back(c.id);
  return ids;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed) {
  std::string prefix = suite_prefix(suite);
  std::vector<const Check*> selected;
  for (const Check& c : kChecks)
    if (std::string(c.id).rfind(prefix, 0) == 0) selected.push_back(&c);

  SuiteReport rep;
  rep.suite = suite;
  rep.seed = seed;
  rep.results.resize(selected.size());

  auto run_one = [&](std::size_t i) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
    try {
      rep.results[i] = selected[i]->fn(s);
    } catch (const std::exception& e) {
      rep.results[i] = {selected[i]->id, false,
                        std::string("exception: ") + e.what()};
    }
  };

  unsigned cap = thread_cap();
  if (cap <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
  } else {
    std::vector<std::future<void>> batch;
    for (std::size_t i = 0; i < selected.size(); ++i) {
      batch.push_back(std::async(std::launch::async, run_one, i));
      if (batch.size() == cap) {
        for (auto& f : batch) f.get();
        batch.clear();
      }
    }
    for (auto& f : batch) f.get();
  }
  return rep;
}

}  // namespace ivpoly
