#include "ivpoly/lattices.hpp"

#include <sstream>
#include <stdexcept>

#include "ivpoly/membership.hpp"

namespace ivpoly {

bool IntLattice::contains(const Poly& f) const {
  if (f.degree() > static_cast<int>(degree_bound)) return false;
  BinomPoly b = to_binomial(f);
  if (!b.integer_coeffs()) return false;
  std::vector<Int> v(degree_bound + 1, Int(0));
  for (int k = 0; k <= b.degree(); ++k)
    v[static_cast<std::size_t>(k)] = b.coeff(static_cast<std::size_t>(k)).get_num();
  return lattice_contains(basis, v);
}

Poly IntLattice::row_poly(std::size_t i) const {
  std::vector<Rat> cs;
  cs.reserve(basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) cs.emplace_back(basis.at(i, j));
  return from_binomial(BinomPoly(std::move(cs)));
}

IntLattice basis_int_mod(const Int& m, unsigned D) {
  if (m == 0)
    throw std::invalid_argument("basis_int_mod: modulus 0");
  Int mm = abs(m);
  // In binomial coordinates, the telescoping quotient of C(X,k) by step m has
  // coordinate C(m, k-j) at position j < k (Vandermonde), so membership reads
  //   sum_{k>j} c_k * C(m, k-j) === 0  (mod m)   for j = 0..D-1.
  IMatrix a(D, D + 1);
  for (unsigned j = 0; j < D; ++j)
    for (unsigned k = j + 1; k <= D; ++k)
      a.at(j, k) = binomial(mm, k - j);
  std::vector<Int> mods(D, mm);
  return {D, congruence_lattice_basis(a, mods)};
}

IntLattice basis_int_k(unsigned k, unsigned D) {
  // Row r of the t-th derivative map sends binomial coordinates of f to the
  // r-th binomial coordinate of f^(t); clearing its denominator lcm L turns
  // "coordinate is an integer" into a congruence mod L.
  IMatrix a(0, D + 1);
  std::vector<Int> mods;
  for (unsigned t = 1; t <= k; ++t) {
    std::vector<std::vector<Rat>> col(D + 1);
    int out_deg = -1;
    for (unsigned j = 0; j <= D; ++j) {
      Poly der = binomial_poly(j);
      for (unsigned s = 0; s < t; ++s) der = der.derivative();
      BinomPoly b = to_binomial(der);
      col[j].resize(D + 1, Rat(0));
      for (int r = 0; r <= b.degree(); ++r)
        col[j][static_cast<std::size_t>(r)] = b.coeff(static_cast<std::size_t>(r));
      if (b.degree() > out_deg) out_deg = b.degree();
    }
    for (int r = 0; r <= out_deg; ++r) {
      Int L = 1;
      for (unsigned j = 0; j <= D; ++j)
        L = lcm(L, col[j][static_cast<std::size_t>(r)].get_den());
      if (L == 1) continue;  // integral row: vacuous constraint
      std::vector<Int> row(D + 1);
      for (unsigned j = 0; j <= D; ++j) {
        Rat scaled = col[j][static_cast<std::size_t>(r)] * Rat(L);
        row[j] = scaled.get_num();
      }
      a.append_row(row);
      mods.push_back(L);
    }
  }
  return {D, congruence_lattice_basis(a, mods)};
}

std::string to_string(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::equal:
      return "EQUAL";
    case ConjectureVerdict::proper_sublattice:
      return "CONJECTURE-PROPER-SUBLATTICE";
    case ConjectureVerdict::incomparable:
      return "INCOMPARABLE";
  }
  return "?";
}

namespace {

std::vector<Int> hnf_pivots(const IMatrix& m) {
  std::vector<Int> p;
  p.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    long c = pivot_column(m, i);
    if (c >= 0) p.push_back(m.at(i, static_cast<std::size_t>(c)));
  }
  return p;
}

/* First row of `rows` outside the row span of `lat`, if any. */
std::vector<Int> first_row_outside(const IMatrix& rows, const IMatrix& lat) {
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    std::vector<Int> r = rows.row(i);
    if (!lattice_contains(lat, r)) return r;
  }
  return {};
}

}  // namespace

ConjectureReport conjecture_check_mod4(unsigned D) {
  if (D < 6)
    throw std::invalid_argument(
        "conjecture_check_mod4: need degree bound >= 6 to include every "
        "generator shape");
  ConjectureReport rep;
  rep.degree_bound = D;

  IMatrix gen(0, D + 1);
  auto unit = [&](unsigned k, const Int& c) {
    std::vector<Int> r(D + 1, Int(0));
    r[k] = c;
    return r;
  };
  gen.append_row(unit(0, 1));
  gen.append_row(unit(1, 1));
  gen.append_row(unit(2, 2));
  gen.append_row(unit(3, 2));
  {
    std::vector<Int> r = unit(4, 2);
    r[2] = 1;
    gen.append_row(r);
  }
  {
    std::vector<Int> r = unit(5, 2);
    r[3] = 1;
    gen.append_row(r);
  }
  for (unsigned k = 6; k <= D; ++k) gen.append_row(unit(k, 4));

  rep.generators_are_members = true;
  for (std::size_t i = 0; i < gen.rows(); ++i) {
    std::vector<Rat> cs;
    for (std::size_t j = 0; j < gen.cols(); ++j) cs.emplace_back(gen.at(i, j));
    Poly g = from_binomial(BinomPoly(std::move(cs)));
    if (!in_int_mod(g, 4).member) rep.generators_are_members = false;
  }

  rep.computed = basis_int_mod(4, D).basis;
  rep.conjectured = hnf(gen);
  rep.computed_pivots = hnf_pivots(rep.computed);
  rep.conjectured_pivots = hnf_pivots(rep.conjectured);

  if (lattice_equal(rep.computed, rep.conjectured)) {
    rep.verdict = ConjectureVerdict::equal;
    return rep;
  }
  rep.in_conjectured_only = first_row_outside(rep.conjectured, rep.computed);
  rep.in_computed_only = first_row_outside(rep.computed, rep.conjectured);
  rep.verdict = rep.in_conjectured_only.empty()
                    ? ConjectureVerdict::proper_sublattice
                    : ConjectureVerdict::incomparable;
  return rep;
}

std::string ConjectureReport::to_string() const {
  std::ostringstream os;
  os << "degree <= " << degree_bound << ": " << ivpoly::to_string(verdict)
     << "\n";
  os << "generators integer-valued with preserved congruences: "
     << (generators_are_members ? "yes" : "no") << "\n";
  os << "computed basis:    " << computed.to_string() << "\n";
  os << "conjectured basis: " << conjectured.to_string() << "\n";
  auto vec = [](const std::vector<Int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i].get_str();
    }
    return s + "]";
  };
  os << "computed pivots:    " << vec(computed_pivots) << "\n";
  os << "conjectured pivots: " << vec(conjectured_pivots) << "\n";
  if (!in_computed_only.empty())
    os << "in computed only:    " << vec(in_computed_only) << "\n";
  if (!in_conjectured_only.empty())
    os << "in conjectured only: " << vec(in_conjectured_only) << "\n";
  return os.str();
}

}  // namespace ivpoly
