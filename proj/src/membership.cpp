#include "ivpoly/membership.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ivpoly/findiff.hpp"
#include "ivpoly/multipoly.hpp"

namespace ivpoly {

std::string Witness::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case WitnessKind::none:
      return "(no witness)";
    case WitnessKind::eval_point:
      if (deriv > 0) os << "derivative " << deriv << ": ";
      os << "value at " << ivpoly::to_string(point[0]) << " is "
         << ivpoly::to_string(value);
      break;
    case WitnessKind::congruence:
      os << "f(" << ivpoly::to_string(point[1]) << ") - f("
         << ivpoly::to_string(point[0]) << ") = " << ivpoly::to_string(value)
         << ", not divisible by " << ivpoly::to_string(modulus);
      break;
    case WitnessKind::delta_chain: {
      os << "after";
      for (std::size_t i = 0; i < multipliers.size(); ++i)
        os << " [y*Delta_{" << ivpoly::to_string(multipliers[i]) << "*y} at y="
           << ivpoly::to_string(displacements[i]) << "]";
      if (multipliers.empty()) os << " no differences";
      os << ", value at " << ivpoly::to_string(point[0]) << " is "
         << ivpoly::to_string(value);
      break;
    }
    case WitnessKind::denominator:
      os << "coefficient " << ivpoly::to_string(value)
         << " has denominator not coprime to " << ivpoly::to_string(modulus);
      break;
  }
  if (!note.empty()) os << " (" << note << ")";
  return os.str();
}

MembershipVerdict in_int(const Poly& f) {
  BinomPoly b = to_binomial(f);
  const auto& cs = b.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (is_integer(cs[k])) continue;
    // Coefficients below k are integral, so f(k) differs from cs[k] by an
    // integer and is itself non-integral.
    Witness w;
    w.kind = WitnessKind::eval_point;
    w.point = {Int(static_cast<unsigned long>(k))};
    w.value = f.eval(Rat(static_cast<unsigned long>(k)));
    w.note = "binomial coefficient " + std::to_string(k) + " is " +
             ivpoly::to_string(cs[k]);
    return {false, w};
  }
  return {};
}

MembershipVerdict in_int_k(const Poly& f, unsigned k) {
  Poly g = f;
  for (unsigned j = 0; j <= k; ++j) {
    MembershipVerdict v = in_int(g);
    if (!v.member) {
      v.witness.deriv = j;
      return v;
    }
    g = g.derivative();
  }
  return {};
}

MembershipVerdict in_int_mod(const Poly& f, const Int& m) {
  if (m == 0)
    throw std::invalid_argument(
        "in_int_mod: modulus 0 (the difference quotient needs a nonzero "
        "step)");
  Int mm = abs(m);
  MembershipVerdict base = in_int(f);
  if (!base.member) return base;
  if (mm == 1) return {};
  // Telescoping criterion: f lands in the family iff (f(X+m) - f(X))/m is
  // again integer-valued.
  Poly g = (f.shifted(Rat(mm)) - f) / Rat(mm);
  BinomPoly b = to_binomial(g);
  for (int k = 0; k <= b.degree(); ++k) {
    const Rat c = b.coeff(static_cast<std::size_t>(k));
    if (is_integer(c)) continue;
    Int a(static_cast<unsigned long>(k));
    Witness w;
    w.kind = WitnessKind::congruence;
    w.point = {a, a + mm};
    w.value = f.eval(Rat(a + mm)) - f.eval(Rat(a));
    w.modulus = mm;
    return {false, w};
  }
  return {};
}

namespace {

struct MultisetGroups {
  std::vector<Int> values;       // distinct, ascending
  std::vector<unsigned> counts;  // multiplicities
};

MultisetGroups group_multiset(const std::vector<Int>& sorted) {
  MultisetGroups g;
  for (const Int& v : sorted) {
    if (!g.values.empty() && g.values.back() == v) {
      ++g.counts.back();
    } else {
      g.values.push_back(v);
      g.counts.push_back(1);
    }
  }
  return g;
}

/* Number of index subsets of the remaining multiset realizing the chosen
 * submultiset: a product of binomials per distinct value. */
Int subset_weight(const MultisetGroups& all, const std::vector<unsigned>& take) {
  Int w = 1;
  for (std::size_t i = 0; i < all.counts.size(); ++i)
    w *= binomial(Int(all.counts[i]), take[i]);
  return w;
}

}  // namespace

MembershipVerdict in_int_multiset(const Poly& f, std::vector<Int> S,
                                  std::size_t max_size) {
  if (S.size() > max_size)
    throw std::invalid_argument(
        "in_int_multiset: multiset larger than the configured cap (" +
        std::to_string(max_size) + ")");
  std::sort(S.begin(), S.end());

  Int leaves_hit = 0;  // weighted by index-subset multiplicity
  std::optional<Witness> failure;

  // T is always a prefix-sorted submultiset of S; us is the chain of
  // multipliers applied so far; weight counts identical index-subset chains
  // collapsed by the value-level deduplication.
  std::function<void(const MultiPoly&, const std::vector<Int>&,
                     std::vector<Int>&, const Int&)>
      walk = [&](const MultiPoly& P, const std::vector<Int>& T,
                 std::vector<Int>& us, const Int& weight) {
        if (T.empty()) {
          leaves_hit += weight;
          if (failure) return;
          if (auto idx = non_integral_index(P)) {
            Witness w;
            w.kind = WitnessKind::delta_chain;
            w.multipliers = us;
            w.point = {Int((*idx)[0])};
            for (std::size_t i = 1; i < idx->size(); ++i)
              w.displacements.push_back(Int((*idx)[i]));
            std::vector<Rat> pt;
            pt.reserve(idx->size());
            for (unsigned e : *idx) pt.emplace_back(static_cast<unsigned long>(e));
            w.value = P.eval(pt);
            w.note = std::to_string(us.size()) + " difference level(s)";
            failure = std::move(w);
          }
          return;
        }

        std::vector<Int> rest(T.begin(), T.end() - 1);
        const Int s = T.back();
        walk(P, rest, us, weight);

        // Distinct submultisets U of rest, by per-value take counts.
        MultisetGroups g = group_multiset(rest);
        std::vector<unsigned> take(g.counts.size(), 0);
        for (;;) {
          std::vector<Int> U;
          Int prod = s;
          for (std::size_t i = 0; i < g.values.size(); ++i) {
            for (unsigned c = 0; c < take[i]; ++c) U.push_back(g.values[i]);
            for (unsigned c = take[i]; c < g.counts[i]; ++c)
              prod *= g.values[i];  // left-out entries multiply the step
          }
          MultiPoly P2 = delta_displaced(P, 0, prod);
          us.push_back(prod);
          walk(P2, U, us, weight * subset_weight(g, take));
          us.pop_back();

          std::size_t i = 0;
          while (i < take.size() && take[i] == g.counts[i]) take[i++] = 0;
          if (i == take.size()) break;
          ++take[i];
        }
      };

  MultiPoly P0 = MultiPoly::from_poly(f, 1, 0);
  std::vector<Int> us;
  walk(P0, S, us, Int(1));

  const std::vector<Int> bell = bell_numbers(S.size() + 1);
  if (leaves_hit != bell[S.size() + 1])
    throw internal_error("in_int_multiset: condition count " +
                         leaves_hit.get_str() + " != expected " +
                         bell[S.size() + 1].get_str());

  if (failure) return {false, *failure};
  return {};
}

Rat replay_delta_chain(const Poly& f, const std::vector<Int>& multipliers,
                       const std::vector<Int>& displacements, const Int& x0) {
  if (multipliers.size() != displacements.size())
    throw std::invalid_argument("replay_delta_chain: chain length mismatch");
  Poly P = f;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const Int& y = displacements[i];
    Int step = multipliers[i] * y;
    if (step == 0) {
      P = P.derivative() * Rat(y);
    } else {
      P = (P.shifted(Rat(step)) - P) / Rat(step) * Rat(y);
    }
  }
  return P.eval(Rat(x0));
}

bool witness_falsifies(const Poly& f, const Witness& w) {
  switch (w.kind) {
    case WitnessKind::none:
      return false;
    case WitnessKind::eval_point: {
      Poly g = f;
      for (unsigned j = 0; j < w.deriv; ++j) g = g.derivative();
      Rat v = g.eval(Rat(w.point.at(0)));
      return !is_integer(v) && v == w.value;
    }
    case WitnessKind::congruence: {
      Rat d = f.eval(Rat(w.point.at(1))) - f.eval(Rat(w.point.at(0)));
      if (!is_integer(d) || d != w.value) return false;
      return mod_floor(d.get_num(), w.modulus) != 0;
    }
    case WitnessKind::delta_chain: {
      Rat v = replay_delta_chain(f, w.multipliers, w.displacements,
                                 w.point.at(0));
      return !is_integer(v) && v == w.value;
    }
    case WitnessKind::denominator: {
      for (const Rat& c : f.coeffs())
        if (c == w.value) return gcd(Int(c.get_den()), w.modulus) != 1;
      return false;
    }
  }
  return false;
}

}  // namespace ivpoly
