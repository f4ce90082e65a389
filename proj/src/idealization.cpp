#include "ivpoly/idealization.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "ivpoly/ringext.hpp"

namespace ivpoly {

namespace {

/* Image of a rational scalar in Z/m through the localization away from m.
 * Defined exactly when the denominator is coprime to m. */
Rat residue(const Rat& c, const Int& m) {
  Int den = c.get_den();
  if (gcd(den, m) != 1)
    throw std::invalid_argument("scalar " + ivpoly::to_string(c) +
                                " is not defined mod " + m.get_str());
  if (m == 1) return Rat(0);
  Int r = c.get_num() * mod_inverse(mod_floor(den, m), m);
  return Rat(mod_floor(r, m));
}

void check_slots(const ModuleSpec& spec, const ModuleElem& a, const char* who) {
  if (a.v.size() != spec.slots())
    throw std::invalid_argument(std::string(who) +
                                ": wrong number of module coordinates");
}

void check_shape(const ModuleSpec& spec, const IdealPoly& F, const char* who) {
  if (F.h.size() != spec.slots())
    throw std::invalid_argument(std::string(who) +
                                ": wrong number of module slots");
}

ModuleElem canon(const ModuleSpec& spec, ModuleElem a) {
  if (spec.kind == ModuleSpec::Kind::ZmodM)
    for (Rat& c : a.v) c = residue(c, spec.m);
  return a;
}

}  // namespace

ModuleSpec ModuleSpec::free_zn(std::size_t n) {
  if (n == 0 || n > kMaxGenerators)
    throw std::invalid_argument("free_zn: rank must be between 1 and " +
                                std::to_string(kMaxGenerators));
  ModuleSpec s;
  s.kind = Kind::FreeZn;
  s.n = n;
  return s;
}

ModuleSpec ModuleSpec::zmod(const Int& m) {
  if (m == 0) throw std::invalid_argument("zmod: modulus must be nonzero");
  ModuleSpec s;
  s.kind = Kind::ZmodM;
  s.m = abs(m);
  return s;
}

ModuleSpec ModuleSpec::rationals() {
  ModuleSpec s;
  s.kind = Kind::RationalsQ;
  return s;
}

std::string ModuleSpec::to_string() const {
  switch (kind) {
    case Kind::FreeZn:
      return n == 1 ? "Z(+)Z" : "Z(+)Z^" + std::to_string(n);
    case Kind::ZmodM:
      return "Z(+)Z/" + m.get_str();
    case Kind::RationalsQ:
      return "Z(+)Q";
  }
  throw internal_error("ModuleSpec: bad kind");
}

ModuleElem module_zero(const ModuleSpec& spec) {
  return ModuleElem{std::vector<Rat>(spec.slots(), Rat(0))};
}

ModuleElem module_add(const ModuleSpec& spec, const ModuleElem& a,
                      const ModuleElem& b) {
  check_slots(spec, a, "module_add");
  check_slots(spec, b, "module_add");
  ModuleElem out = a;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
  return canon(spec, std::move(out));
}

ModuleElem module_scale(const ModuleSpec& spec, const Rat& c,
                        const ModuleElem& a) {
  check_slots(spec, a, "module_scale");
  ModuleElem out = a;
  for (Rat& x : out.v) x *= c;
  return canon(spec, std::move(out));
}

IdealElem ideal_add(const ModuleSpec& spec, const IdealElem& a,
                    const IdealElem& b) {
  return {a.x + b.x, module_add(spec, a.m, b.m)};
}

IdealElem ideal_mul(const ModuleSpec& spec, const IdealElem& a,
                    const IdealElem& b) {
  return {a.x * b.x, module_add(spec, module_scale(spec, a.x, b.m),
                                module_scale(spec, b.x, a.m))};
}

std::string IdealElem::to_string() const {
  std::ostringstream os;
  os << "(" << ivpoly::to_string(x) << " ; ";
  for (std::size_t i = 0; i < m.v.size(); ++i) {
    if (i) os << ", ";
    os << ivpoly::to_string(m.v[i]);
  }
  os << ")";
  return os.str();
}

std::string IdealPoly::to_string() const {
  std::ostringstream os;
  os << "(" << f.to_string() << " ; ";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) os << ", ";
    os << h[i].to_string();
  }
  os << ")";
  return os.str();
}

IdealElem ideal_coefficient(const ModuleSpec& spec, const IdealPoly& F,
                            std::size_t k) {
  check_shape(spec, F, "ideal_coefficient");
  ModuleElem m;
  m.v.reserve(F.h.size());
  for (const Poly& hi : F.h) m.v.push_back(hi.coeff(k));
  return {F.f.coeff(k), canon(spec, std::move(m))};
}

IdealElem ideal_eval(const ModuleSpec& spec, const IdealPoly& F,
                     const IdealElem& z) {
  check_shape(spec, F, "ideal_eval");
  check_slots(spec, z.m, "ideal_eval");
  ModuleElem eps = module_scale(spec, F.f.derivative().eval(z.x), z.m);
  ModuleElem hval;
  hval.v.reserve(F.h.size());
  for (const Poly& hi : F.h) hval.v.push_back(hi.eval(z.x));
  return {F.f.eval(z.x), module_add(spec, eps, canon(spec, std::move(hval)))};
}

IdealElem ideal_eval_horner(const ModuleSpec& spec, const IdealPoly& F,
                            const IdealElem& z) {
  check_shape(spec, F, "ideal_eval_horner");
  check_slots(spec, z.m, "ideal_eval_horner");
  int d = F.f.degree();
  for (const Poly& hi : F.h) d = std::max(d, hi.degree());
  IdealElem acc{Rat(0), module_zero(spec)};
  for (int k = d; k >= 0; --k)
    acc = ideal_add(spec, ideal_mul(spec, acc, z),
                    ideal_coefficient(spec, F, static_cast<std::size_t>(k)));
  return acc;
}

namespace {

MembershipVerdict tagged(MembershipVerdict v, std::uint32_t component,
                         const std::string& label) {
  if (!v.member) {
    v.witness.component = component;
    v.witness.note = label + ": " + v.witness.note;
  }
  return v;
}

/* First coefficient of f whose denominator shares a factor with m, as a
 * denominator witness; empty verdict otherwise. */
MembershipVerdict coefficients_defined_mod(const Poly& f, const Int& m,
                                           std::uint32_t component,
                                           const std::string& label) {
  const auto& cs = f.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (gcd(cs[k].get_den(), m) == 1) continue;
    MembershipVerdict v;
    v.member = false;
    v.witness.kind = WitnessKind::denominator;
    v.witness.value = cs[k];
    v.witness.modulus = m;
    v.witness.component = component;
    v.witness.note = label + ": coefficient of X^" + std::to_string(k) +
                     " is not defined mod " + m.get_str() +
                     " (outside the ring of scalars)";
    return v;
  }
  return {};
}

}  // namespace

MembershipVerdict in_int_idealization(const ModuleSpec& spec,
                                      const IdealPoly& F, unsigned k) {
  check_shape(spec, F, "in_int_idealization");
  switch (spec.kind) {
    case ModuleSpec::Kind::FreeZn: {
      if (auto v = tagged(in_int_k(F.f, k + 1), 0, "base polynomial"); !v)
        return v;
      for (std::size_t i = 0; i < F.h.size(); ++i) {
        auto v = tagged(in_int_k(F.h[i], k), static_cast<std::uint32_t>(i + 1),
                        "module slot " + std::to_string(i + 1));
        if (!v) return v;
      }
      return {};
    }
    case ModuleSpec::Kind::ZmodM: {
      /* The m-torsion module absorbs every derivative condition beyond the
       * base ones: the k+1-st derivative lands in m-divisible territory
       * automatically once the scalars are defined. */
      if (auto v = coefficients_defined_mod(F.f, spec.m, 0, "base polynomial");
          !v)
        return v;
      if (auto v = tagged(in_int_k(F.f, k), 0, "base polynomial"); !v) return v;
      if (auto v = coefficients_defined_mod(F.h[0], spec.m, 1, "module slot 1");
          !v)
        return v;
      return {};
    }
    case ModuleSpec::Kind::RationalsQ:
      /* Q is divisible: the module places no condition at all. */
      return tagged(in_int_k(F.f, k), 0, "base polynomial");
  }
  throw internal_error("in_int_idealization: bad kind");
}

GridCheck ideal_grid_oracle(const ModuleSpec& spec, const IdealPoly& F,
                            unsigned k) {
  check_shape(spec, F, "ideal_grid_oracle");

  /* Within Z(+)Z/m the question is only posed for coefficients inside the
   * ring of scalars; a module coefficient outside it is rejected up front
   * (its pointwise values can hide the defect, unlike the base polynomial,
   * whose derivative values expose it on the grid). */
  if (spec.kind == ModuleSpec::Kind::ZmodM) {
    if (auto v = coefficients_defined_mod(F.h[0], spec.m, 1, "module slot 1");
        !v)
      return {false, 0, {Rat(0), module_zero(spec)},
              "module coefficient outside the ring of scalars"};
  }

  int D = F.f.degree();
  for (const Poly& hi : F.h) D = std::max(D, hi.degree());
  if (D < 0) D = 0;

  std::vector<ModuleElem> ms{module_zero(spec)};
  long hi_x = D + 1;
  switch (spec.kind) {
    case ModuleSpec::Kind::FreeZn:
      for (std::size_t i = 0; i < spec.n; ++i) {
        ModuleElem e = module_zero(spec);
        e.v[i] = 1;
        ms.push_back(e);
      }
      break;
    case ModuleSpec::Kind::ZmodM: {
      for (Int r = 1; r < spec.m; ++r) ms.push_back(ModuleElem{{Rat(r)}});
      hi_x = D + spec.m.get_si() + 1;
      break;
    }
    case ModuleSpec::Kind::RationalsQ:
      ms.push_back(ModuleElem{{Rat(1)}});
      ms.push_back(ModuleElem{{make_rat(1, 2)}});
      ms.push_back(ModuleElem{{make_rat(-3, 7)}});
      break;
  }

  IdealPoly G = F;
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) {
      G.f = G.f.derivative();
      for (Poly& hi : G.h) hi = hi.derivative();
    }
    for (long x = 0; x <= hi_x; ++x) {
      for (const ModuleElem& mm : ms) {
        IdealElem z{Rat(x), mm};
        IdealElem val{Rat(0), module_zero(spec)};
        try {
          val = ideal_eval(spec, G, z);
        } catch (const std::invalid_argument&) {
          return {false, j, z, "scalar action undefined at this point"};
        }
        if (!is_integer(val.x))
          return {false, j, z, "base value is not an integer"};
        if (spec.kind == ModuleSpec::Kind::FreeZn)
          for (const Rat& c : val.m.v)
            if (!is_integer(c))
              return {false, j, z, "module value leaves the lattice"};
        /* ZmodM values are residues by construction; Q absorbs anything. */
      }
    }
  }
  return {};
}

bool CorollaryReport::all_pass() const {
  for (const Row& r : rows)
    if (!r.pass) return false;
  return true;
}

std::string CorollaryReport::to_string() const {
  std::ostringstream os;
  for (const Row& r : rows) {
    os << (r.pass ? "pass" : "FAIL") << "  " << r.name;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

/* Predicate vs grid oracle over a full f x h... sweep; returns a note naming
 * the first disagreement. */
bool sweep_agrees(const ModuleSpec& spec, const std::vector<Poly>& fs,
                  const std::vector<std::vector<Poly>>& hs,
                  const std::vector<unsigned>& ks, std::string& note) {
  for (const Poly& f : fs)
    for (const auto& h : hs)
      for (unsigned k : ks) {
        IdealPoly F{f, h};
        bool pred = in_int_idealization(spec, F, k).member;
        bool grid = ideal_grid_oracle(spec, F, k).ok;
        if (pred != grid) {
          note = "disagreement at k=" + std::to_string(k) + " on " +
                 F.to_string() + " over " + spec.to_string();
          return false;
        }
      }
  return true;
}

GenDualPoly to_rank1_dual(const IdealPoly& F) {
  RelationVector rel{{Int(0)}};
  GenDualPoly g(rel);
  g.set_component(0, F.f);
  g.set_component(1, F.h.at(0));
  return g;
}

}  // namespace

CorollaryReport canned_corollary_checks() {
  CorollaryReport rep;
  auto add = [&rep](const std::string& name, bool pass,
                    const std::string& note) {
    rep.rows.push_back({name, pass, note});
  };

  const std::vector<Poly> fs_free = {P("0"),      P("1"),      P("X"),
                                     P("1/2*X"),  P("C(X,2)"), P("C(X,3)"),
                                     P("X^2")};
  const std::vector<Poly> hs_pool = {P("0"), P("X"), P("C(X,2)"), P("1/2*X"),
                                     P("C(X,4)")};
  const std::vector<unsigned> ks = {0, 1};

  {
    std::vector<std::vector<Poly>> hs2;
    for (const Poly& a : hs_pool)
      for (const Poly& b : hs_pool) hs2.push_back({a, b});
    std::string note = "full sweep agreed";
    bool ok = sweep_agrees(ModuleSpec::free_zn(2), fs_free, hs2, ks, note);
    add("free-rank-2-grid", ok, note);
  }

  {
    const std::vector<Poly> fs_mod = {
        P("0"),          P("1"),           P("X"),       P("C(X,2)"),
        P("C(X,3)"),     P("C(X,4)"),      P("1/2*X"),   P("1/2*X^2"),
        P("1/2*X^2 + 1/2*X"), P("C(X,2) + 1/3*X"), P("2*C(X,3)"), P("1/6*X^3")};
    std::vector<std::vector<Poly>> hs1;
    for (const Poly& a : hs_pool) hs1.push_back({a});
    hs1.push_back({P("1/3*X")});  // outside the scalars mod 3
    std::string note = "full sweep agreed";
    ModuleSpec z3 = ModuleSpec::zmod(3);
    bool ok = sweep_agrees(z3, fs_mod, hs1, ks, note);
    /* The torsion module forgives the extra derivative: C(X,2) has a
     * half-integral derivative yet stays a member at k = 0. */
    if (ok) {
      IdealPoly F{P("C(X,2)"), {P("0")}};
      bool pred = in_int_idealization(z3, F, 0).member;
      bool raised = in_int_idealization(z3, F, 1).member;
      if (!pred || raised) {
        ok = false;
        note = "torsion membership pattern for C(X,2) broken";
      }
    }
    add("zmod-3-grid", ok, note);
  }

  {
    ModuleSpec z3 = ModuleSpec::zmod(3);
    IdealPoly F{P("X"), {P("1/3*X")}};
    auto v = in_int_idealization(z3, F, 0);
    bool ok = !v.member && v.witness.kind == WitnessKind::denominator &&
              v.witness.component == 1 && !ideal_grid_oracle(z3, F, 0).ok;
    add("zmod-residue-module", ok,
        ok ? "module coefficient outside the scalars rejected on both paths"
           : "rejection missing or untagged");
  }

  {
    const std::vector<Poly> fs_q = {P("0"), P("X"), P("1/2*X"), P("C(X,2)"),
                                    P("C(X,5)")};
    std::vector<std::vector<Poly>> hs1 = {
        {P("0")}, {P("1/7*X^9")}, {P("1/3*C(X,2)")}};
    std::string note = "full sweep agreed";
    ModuleSpec q = ModuleSpec::rationals();
    bool ok = sweep_agrees(q, fs_q, hs1, {0, 1, 2}, note);
    if (ok) {
      IdealPoly F{P("C(X,2)"), {P("1/7*X^9")}};
      if (!in_int_idealization(q, F, 0).member) {
        ok = false;
        note = "divisible module rejected an arbitrary module part";
      }
    }
    add("rationals-grid", ok, note);
  }

  {
    ModuleSpec z4 = ModuleSpec::zmod(4);
    IdealPoly F{P("X^2"), {P("X")}};
    IdealElem z{Rat(3), ModuleElem{{Rat(2)}}};
    IdealElem want{Rat(9), ModuleElem{{Rat(3)}}};
    IdealElem a = ideal_eval(z4, F, z);
    IdealElem b = ideal_eval_horner(z4, F, z);
    bool ok = a == want && b == want;
    add("worked-example-eval", ok,
        "X^2 + X eps at (3 ; 2) mod 4 evaluates to (9 ; 3) on both paths");
  }

  {
    /* Rank-1 free module against the square-zero dual-number presentation:
     * same membership and same evaluations under f + h*eps |-> (f ; h). */
    ModuleSpec z1 = ModuleSpec::free_zn(1);
    RelationVector rel{{Int(0)}};
    bool ok = true;
    std::string note = "membership and evaluation agree across the iso";
    for (const Poly& f : fs_free) {
      for (const Poly& h : hs_pool) {
        IdealPoly F{f, {h}};
        GenDualPoly G = to_rank1_dual(F);
        if (in_int_idealization(z1, F, 0).member != in_int_ext(G).member) {
          ok = false;
          note = "membership differs on " + F.to_string();
          break;
        }
        for (long x = -2; x <= 2 && ok; ++x) {
          for (long mm = -1; mm <= 1; ++mm) {
            IdealElem z{Rat(x), ModuleElem{{Rat(mm)}}};
            GenDualElem zg(rel);
            zg.set_coeff(0, Rat(x));
            zg.set_coeff(1, Rat(mm));
            IdealElem got = ideal_eval(z1, F, z);
            GenDualElem ref = eval_direct(G, zg);
            if (got.x != ref.coeff(0) || got.m.v[0] != ref.coeff(1)) {
              ok = false;
              note = "evaluation differs on " + F.to_string();
              break;
            }
          }
        }
      }
      if (!ok) break;
    }
    add("dual-number-iso", ok, note);
  }

  {
    /* Membership filtration is nested: level k+1 implies level k. */
    bool ok = true;
    std::string note = "level 1 membership implied level 0 throughout";
    std::vector<std::pair<ModuleSpec, IdealPoly>> corpus;
    for (const Poly& f : fs_free)
      for (const Poly& h : hs_pool) {
        corpus.push_back({ModuleSpec::free_zn(1), IdealPoly{f, {h}}});
        corpus.push_back({ModuleSpec::rationals(), IdealPoly{f, {h}}});
        if (gcd(f.denominator_lcm(), 3) == 1 &&
            gcd(h.denominator_lcm(), 3) == 1)
          corpus.push_back({ModuleSpec::zmod(3), IdealPoly{f, {h}}});
      }
    for (const auto& [spec, F] : corpus) {
      if (in_int_idealization(spec, F, 1).member &&
          !in_int_idealization(spec, F, 0).member) {
        ok = false;
        note = "nesting broken on " + F.to_string() + " over " +
               spec.to_string();
        break;
      }
    }
    add("filtration-nesting", ok, note);
  }

  {
    /* The square-zero extension with independent generators is not the free
     * module idealization: eps1*eps2 survives in the former, dies in the
     * latter, and membership separates on cross terms. */
    RelationVector rel2{{Int(0), Int(0)}};
    ModuleSpec z2 = ModuleSpec::free_zn(2);
    bool ok = true;
    std::string note =
        "cross term and derivative conditions separate the two rings";

    GenDualElem e1 = GenDualElem::generator(rel2, 0);
    GenDualElem e2 = GenDualElem::generator(rel2, 1);
    if ((e1 * e2).is_zero()) ok = false;
    IdealElem d1{Rat(0), ModuleElem{{Rat(1), Rat(0)}}};
    IdealElem d2{Rat(0), ModuleElem{{Rat(0), Rat(1)}}};
    IdealElem prod = ideal_mul(z2, d1, d2);
    if (prod.x != 0 || prod.m.v[0] != 0 || prod.m.v[1] != 0) ok = false;

    GenDualPoly cross(rel2);
    cross.set_component(3, P("1/2*X"));
    if (in_int_ext(cross).member) ok = false;  // eps1*eps2 slot is visible
    IdealPoly collapsed{P("0"), {P("0"), P("0")}};
    if (!in_int_idealization(z2, collapsed, 0).member) ok = false;

    GenDualPoly slot(rel2);
    slot.set_component(1, P("C(X,2)"));  // coefficient of eps1
    if (in_int_ext(slot).member) ok = false;  // needs an integral derivative
    IdealPoly moved{P("0"), {P("C(X,2)"), P("0")}};
    if (!in_int_idealization(z2, moved, 0).member) ok = false;

    if (!ok) note = "separation failed";
    add("square-zero-separation", ok, note);
  }

  return rep;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

ModuleSpec parse_module_spec(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.rfind("Z(+)", 0) != 0) t = "Z(+)" + t;  // the base ring is implied
  if (t == "Z(+)Q") return ModuleSpec::rationals();
  if (t == "Z(+)Z") return ModuleSpec::free_zn(1);
  if (t.rfind("Z(+)Z^", 0) == 0) {
    std::string num = t.substr(6);
    if (num.empty() || num.size() > 2 ||
        !std::all_of(num.begin(), num.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw std::invalid_argument("bad module rank in '" + text + "'");
    return ModuleSpec::free_zn(std::stoul(num));
  }
  if (t.rfind("Z(+)Z/", 0) == 0) {
    std::string num = t.substr(6);
    if (num.empty() || num.size() > 9 ||
        !std::all_of(num.begin(), num.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw std::invalid_argument("bad modulus in '" + text + "'");
    return ModuleSpec::zmod(Int(num));
  }
  throw std::invalid_argument("unrecognized module '" + text +
                              "' (expected Z(+)Z^n, Z(+)Z/m, or Z(+)Q)");
}

std::pair<IdealPoly, std::optional<ModuleSpec>> parse_ideal_poly(
    const std::string& text) {
  std::string body = strip(text);
  std::optional<ModuleSpec> spec;

  /* Split off a trailing " over <module>" after the matching close paren
   * (the module name itself contains parentheses). */
  if (body.empty() || body.front() != '(')
    throw std::invalid_argument("expected '(f ; h1, ...)'");
  std::size_t close = std::string::npos;
  for (std::size_t i = 0, depth = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string::npos)
    throw std::invalid_argument("unbalanced parentheses");
  if (close + 1 < body.size()) {
    std::string tail = strip(body.substr(close + 1));
    if (tail.rfind("over", 0) != 0 ||
        (tail.size() > 4 && !std::isspace(static_cast<unsigned char>(tail[4]))))
      throw std::invalid_argument("unexpected text after ')': '" + tail + "'");
    spec = parse_module_spec(tail.substr(4));
    body = strip(body.substr(0, close + 1));
  }

  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw std::invalid_argument("expected '(f ; h1, ...)'");
  std::string inner = body.substr(1, body.size() - 2);

  /* Top-level split on ';' then ','. Only C(X,k) nests parentheses, so a
   * depth counter suffices. */
  std::vector<std::string> parts{""};
  std::vector<char> seps;
  int depth = 0;
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced parentheses");
    if (depth == 0 && (c == ';' || c == ',')) {
      seps.push_back(c);
      parts.push_back("");
    } else {
      parts.back() += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses");
  if (seps.empty() || seps.front() != ';' ||
      std::count(seps.begin(), seps.end(), ';') != 1)
    throw std::invalid_argument(
        "expected exactly one ';' between base and module parts");

  IdealPoly F;
  F.f = parse_poly(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    F.h.push_back(parse_poly(parts[i]));

  if (spec && F.h.size() != spec->slots())
    throw std::invalid_argument("module part lists " +
                                std::to_string(F.h.size()) +
                                " slots but the module has " +
                                std::to_string(spec->slots()));
  return {std::move(F), spec};
}

}  // namespace ivpoly
