#include "ivpoly/ringext.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ivpoly/findiff.hpp"

namespace ivpoly {

bool RelationVector::all_zero() const {
  for (const Int& v : r)
    if (v != 0) return false;
  return true;
}

Int RelationVector::overlap_product(Mask s, Mask t) const {
  Int p = 1;
  Mask both = s & t;
  for (std::size_t i = 0; i < r.size() && (both >> i) != 0; ++i)
    if (both & (Mask(1) << i)) p *= r[i];
  return p;
}

std::string mask_label(Mask s) {
  if (s == 0) return "1";
  std::string out;
  for (unsigned i = 0; (s >> i) != 0; ++i) {
    if (!(s & (Mask(1) << i))) continue;
    if (!out.empty()) out += "*";
    out += "rho" + std::to_string(i + 1);
  }
  return out;
}

namespace {

void check_relations(const RelationVector& rel) {
  if (rel.n() < 1)
    throw std::invalid_argument("relation vector must have n >= 1");
  if (rel.n() > kMaxGenerators)
    throw std::invalid_argument("more than " +
                                std::to_string(kMaxGenerators) +
                                " generators");
}

}  // namespace

GenDualElem::GenDualElem(RelationVector rel) : rel_(std::move(rel)) {
  check_relations(rel_);
}

GenDualElem GenDualElem::scalar(const RelationVector& rel, const Rat& v) {
  GenDualElem e(rel);
  e.set_coeff(0, v);
  return e;
}

GenDualElem GenDualElem::generator(const RelationVector& rel, std::size_t i) {
  if (i >= rel.n())
    throw std::invalid_argument("generator index out of range");
  GenDualElem e(rel);
  e.set_coeff(Mask(1) << i, Rat(1));
  return e;
}

Rat GenDualElem::coeff(Mask s) const {
  auto it = c_.find(s);
  return it == c_.end() ? Rat(0) : it->second;
}

void GenDualElem::set_coeff(Mask s, const Rat& v) {
  if (s >= (Mask(1) << rel_.n()))
    throw std::invalid_argument("subset mask out of range");
  if (v == 0)
    c_.erase(s);
  else
    c_[s] = v;
}

void GenDualElem::check_same(const GenDualElem& o) const {
  if (rel_ != o.rel_)
    throw std::invalid_argument("relation vectors differ");
}

GenDualElem GenDualElem::operator+(const GenDualElem& o) const {
  check_same(o);
  GenDualElem out(rel_);
  out.c_ = c_;
  for (const auto& [s, v] : o.c_) {
    Rat nv = out.coeff(s) + v;
    out.set_coeff(s, nv);
  }
  return out;
}

GenDualElem GenDualElem::operator-(const GenDualElem& o) const {
  check_same(o);
  GenDualElem out(rel_);
  out.c_ = c_;
  for (const auto& [s, v] : o.c_) {
    Rat nv = out.coeff(s) - v;
    out.set_coeff(s, nv);
  }
  return out;
}

GenDualElem GenDualElem::operator*(const GenDualElem& o) const {
  check_same(o);
  GenDualElem out(rel_);
  for (const auto& [s, a] : c_) {
    for (const auto& [t, b] : o.c_) {
      Int w = rel_.overlap_product(s, t);
      if (w == 0) continue;
      Mask u = s | t;
      out.set_coeff(u, out.coeff(u) + a * b * Rat(w));
    }
  }
  return out;
}

GenDualElem GenDualElem::operator*(const Rat& s) const {
  GenDualElem out(rel_);
  if (s == 0) return out;
  for (const auto& [m, v] : c_) out.c_[m] = v * s;
  return out;
}

bool GenDualElem::operator==(const GenDualElem& o) const {
  return rel_ == o.rel_ && c_ == o.c_;
}

bool GenDualElem::integral() const {
  for (const auto& [s, v] : c_)
    if (!is_integer(v)) return false;
  return true;
}

std::string GenDualElem::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, v] : c_) {
    Rat mag = v < 0 ? Rat(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (s == 0) {
      os << ivpoly::to_string(mag);
    } else if (mag == 1) {
      os << mask_label(s);
    } else {
      os << ivpoly::to_string(mag) << "*" << mask_label(s);
    }
  }
  return os.str();
}

std::pair<GenDualElem, Rat> conj_norm(const GenDualElem& z) {
  if (z.n() != 1) throw std::invalid_argument("conj_norm: n must be 1");
  Rat x = z.coeff(0), y = z.coeff(1);
  Rat r(z.relations().r[0]);
  GenDualElem conj(z.relations());
  conj.set_coeff(0, x + y * r);
  conj.set_coeff(1, -y);
  return {conj, x * (x + r * y)};
}

bool is_regular(const GenDualElem& z) {
  if (z.n() != 1) throw std::invalid_argument("is_regular: n must be 1");
  Rat x = z.coeff(0), y = z.coeff(1);
  Rat r(z.relations().r[0]);
  return x != 0 && x + r * y != 0;
}

GenDualPoly::GenDualPoly(RelationVector rel) : rel_(std::move(rel)) {
  check_relations(rel_);
}

Poly GenDualPoly::component(Mask s) const {
  auto it = comp_.find(s);
  return it == comp_.end() ? Poly() : it->second;
}

void GenDualPoly::set_component(Mask s, const Poly& f) {
  if (s >= (Mask(1) << rel_.n()))
    throw std::invalid_argument("subset mask out of range");
  if (f.is_zero())
    comp_.erase(s);
  else
    comp_[s] = f;
}

void GenDualPoly::check_same(const GenDualPoly& o) const {
  if (rel_ != o.rel_)
    throw std::invalid_argument("relation vectors differ");
}

int GenDualPoly::degree() const {
  int d = -1;
  for (const auto& [s, f] : comp_) d = std::max(d, f.degree());
  return d;
}

GenDualElem GenDualPoly::coefficient(std::size_t k) const {
  GenDualElem e(rel_);
  for (const auto& [s, f] : comp_) e.set_coeff(s, f.coeff(k));
  return e;
}

GenDualPoly GenDualPoly::derivative() const {
  GenDualPoly out(rel_);
  for (const auto& [s, f] : comp_) out.set_component(s, f.derivative());
  return out;
}

GenDualPoly GenDualPoly::operator+(const GenDualPoly& o) const {
  check_same(o);
  GenDualPoly out = *this;
  for (const auto& [s, f] : o.comp_) out.set_component(s, out.component(s) + f);
  return out;
}

GenDualPoly GenDualPoly::operator-(const GenDualPoly& o) const {
  check_same(o);
  GenDualPoly out = *this;
  for (const auto& [s, f] : o.comp_) out.set_component(s, out.component(s) - f);
  return out;
}

GenDualPoly GenDualPoly::operator*(const GenDualPoly& o) const {
  check_same(o);
  GenDualPoly out(rel_);
  for (const auto& [s, f] : comp_) {
    for (const auto& [t, g] : o.comp_) {
      Int w = rel_.overlap_product(s, t);
      if (w == 0) continue;
      Mask u = s | t;
      out.set_component(u, out.component(u) + f * g * Rat(w));
    }
  }
  return out;
}

GenDualPoly GenDualPoly::operator*(const Rat& s) const {
  GenDualPoly out(rel_);
  if (s == 0) return out;
  for (const auto& [m, f] : comp_) out.comp_[m] = f * s;
  return out;
}

bool GenDualPoly::operator==(const GenDualPoly& o) const {
  return rel_ == o.rel_ && comp_ == o.comp_;
}

std::string GenDualPoly::to_string() const {
  if (comp_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, f] : comp_) {
    if (!first) os << " + ";
    first = false;
    if (s == 0)
      os << f.to_string();
    else
      os << "(" << f.to_string() << ")*" << mask_label(s);
  }
  return os.str();
}

GenDualElem eval_direct(const GenDualPoly& f, const GenDualElem& z) {
  if (f.relations() != z.relations())
    throw std::invalid_argument("relation vectors differ");
  int d = f.degree();
  if (d < 0) return GenDualElem(f.relations());
  GenDualElem acc = f.coefficient(static_cast<std::size_t>(d));
  for (int k = d - 1; k >= 0; --k)
    acc = acc * z + f.coefficient(static_cast<std::size_t>(k));
  return acc;
}

std::vector<std::vector<std::vector<unsigned>>> set_partitions(
    const std::vector<unsigned>& elements) {
  std::vector<std::vector<std::vector<unsigned>>> out;
  const std::size_t m = elements.size();
  std::vector<unsigned> rgs(m, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i,
                                                       unsigned mx) {
    if (i == m) {
      unsigned blocks = m == 0 ? 0 : mx + 1;
      std::vector<std::vector<unsigned>> part(blocks);
      for (std::size_t j = 0; j < m; ++j) part[rgs[j]].push_back(elements[j]);
      out.push_back(std::move(part));
      return;
    }
    for (unsigned v = 0; v <= mx + 1; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(mx, v));
    }
  };
  if (m == 0) {
    out.push_back({});
    return out;
  }
  // rgs[0] is pinned to 0; recursion starts at position 1.
  rec(1, 0);
  return out;
}

GenDualElem eval_closed_dual(const GenDualPoly& f, const GenDualElem& z) {
  if (f.relations() != z.relations())
    throw std::invalid_argument("relation vectors differ");
  if (!f.relations().all_zero())
    throw std::invalid_argument(
        "eval_closed_dual: closed form needs all relations zero");
  const std::size_t n = f.n();
  const Rat x0 = z.coeff(0);

  // F^(k)(x0) as ring elements, k = 0..n.
  std::vector<GenDualElem> ders;
  GenDualPoly cur = f;
  for (std::size_t k = 0; k <= n; ++k) {
    GenDualElem e(f.relations());
    for (const auto& [s, g] : cur.components()) e.set_coeff(s, g.eval(x0));
    ders.push_back(e);
    cur = cur.derivative();
  }

  GenDualElem acc(f.relations());
  for (Mask S = 0; S < (Mask(1) << n); ++S) {
    std::vector<unsigned> bits;
    for (unsigned i = 0; i < n; ++i)
      if (S & (Mask(1) << i)) bits.push_back(i);
    for (const auto& part : set_partitions(bits)) {
      Rat prod(1);
      for (const auto& block : part) {
        Mask bm = 0;
        for (unsigned b : block) bm |= Mask(1) << b;
        prod *= z.coeff(bm);
      }
      if (prod == 0) continue;
      GenDualElem epsS(f.relations());
      epsS.set_coeff(S, prod);
      acc = acc + ders[part.size()] * epsS;
    }
  }
  return acc;
}

GenDualElem eval_closed_rho(const GenDualPoly& f, const GenDualElem& z) {
  if (f.relations() != z.relations())
    throw std::invalid_argument("relation vectors differ");
  if (f.n() != 1) throw std::invalid_argument("eval_closed_rho: n must be 1");
  const RelationVector& rel = f.relations();
  const Rat r(rel.r[0]);
  const Rat x = z.coeff(0), y = z.coeff(1);
  const Poly f0 = f.component(0), f1 = f.component(1);
  const Rat step = y * r;

  auto at = [&](const Poly& g, const Rat& pt) { return g.eval(pt); };
  GenDualElem Fx(rel);
  Fx.set_coeff(0, at(f0, x));
  Fx.set_coeff(1, at(f1, x));
  GenDualElem DF(rel);
  DF.set_coeff(0, delta_at(f0, step).eval(x));
  DF.set_coeff(1, delta_at(f1, step).eval(x));
  GenDualElem yrho(rel);
  yrho.set_coeff(1, y);
  GenDualElem formA = Fx + DF * yrho;

  GenDualElem Fshift(rel);
  Fshift.set_coeff(0, at(f0, x + step));
  Fshift.set_coeff(1, at(f1, x + step));
  GenDualElem rho_minus_r(rel);
  rho_minus_r.set_coeff(0, -r);
  rho_minus_r.set_coeff(1, Rat(1));
  GenDualElem formB = Fshift + (DF * y) * rho_minus_r;

  if (formA != formB)
    throw internal_error("eval_closed_rho: the two closed forms disagree");
  return formA;
}

Int term_count_point_form(std::size_t n) {
  Int total = 0;
  for (Mask S = 0; S < (Mask(1) << n); ++S) {
    std::vector<unsigned> bits;
    for (unsigned i = 0; i < n; ++i)
      if (S & (Mask(1) << i)) bits.push_back(i);
    total += Int(static_cast<unsigned long>(set_partitions(bits).size()));
  }
  return total;
}

Int term_count_component_form(std::size_t n) {
  Int total = 0;
  for (Mask U = 0; U < (Mask(1) << n); ++U) {
    Mask S = U;
    for (;;) {  // all submasks of U, including 0 and U
      std::vector<unsigned> bits;
      for (unsigned i = 0; i < n; ++i)
        if (S & (Mask(1) << i)) bits.push_back(i);
      total += Int(static_cast<unsigned long>(set_partitions(bits).size()));
      if (S == 0) break;
      S = (S - 1) & U;
    }
  }
  return total;
}

MembershipVerdict in_int_ext(const GenDualPoly& f) {
  const std::size_t n = f.n();
  if (n > kMaxMembershipGenerators)
    throw std::invalid_argument("in_int_ext: more than " +
                                std::to_string(kMaxMembershipGenerators) +
                                " generators");
  const std::vector<Int>& r = f.relations().r;
  for (Mask T = 0; T < (Mask(1) << n); ++T) {
    Poly fT = f.component(T);
    if (fT.is_zero()) continue;
    std::vector<Int> ms;
    for (std::size_t i = 0; i < n; ++i)
      if (!(T & (Mask(1) << i))) ms.push_back(r[i]);
    MembershipVerdict v = in_int_multiset(fT, ms);
    if (!v.member) {
      v.witness.component = T;
      v.witness.note = "component " + mask_label(T) +
                       (v.witness.note.empty() ? "" : "; " + v.witness.note);
      return v;
    }
  }
  return {};
}

DenseCheck dense_set_oracle(const GenDualPoly& f, unsigned D) {
  if (!f.relations().all_zero())
    throw std::invalid_argument("dense_set_oracle: relations must be zero");
  if (static_cast<int>(D) < f.degree())
    throw std::invalid_argument(
        "dense_set_oracle: D below a component degree");
  const std::size_t n = f.n();
  for (Int x = 0; x <= Int(D) + Int(static_cast<unsigned long>(n)); ++x) {
    for (Mask b = 0; b < (Mask(1) << n); ++b) {
      GenDualElem z(f.relations());
      z.set_coeff(0, Rat(x));
      for (unsigned i = 0; i < n; ++i)
        if (b & (Mask(1) << i)) z.set_coeff(Mask(1) << i, Rat(1));
      GenDualElem v = eval_direct(f, z);
      if (!v.integral()) return {false, x, b, v};
    }
  }
  return {};
}

PullbackResult pullback_iso(const GenDualPoly& f) {
  if (f.n() != 1) throw std::invalid_argument("pullback_iso: n must be 1");
  const Int& r = f.relations().r[0];
  if (r == 0)
    throw std::invalid_argument(
        "pullback_iso: relation 0 has no fiber description");
  Poly a = f.component(0);
  Poly g = f.component(1);
  Poly b = a + g * Rat(r);
  bool ok = in_int_mod(a, r).member && in_int_mod(b, r).member &&
            in_int(g).member;
  return {a, b, ok};
}

namespace {

struct ExtParser {
  const std::string& s;
  std::size_t i = 0;
  const RelationVector& rel;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(i));
  }
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool peek_word(const char* w) {
    ws();
    std::size_t len = std::char_traits<char>::length(w);
    return s.compare(i, len, w) == 0;
  }
  unsigned long number() {
    ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected a number");
    unsigned long v = 0;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<unsigned long>(s[i] - '0');
      if (i - start > 9) fail("number too long");
      ++i;
    }
    return v;
  }

  GenDualPoly base(const Poly& p) {
    GenDualPoly f(rel);
    f.set_component(0, p);
    return f;
  }

  GenDualPoly primary() {
    ws();
    if (i >= s.size()) fail("unexpected end of input");
    if (eat('(')) {
      GenDualPoly e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (peek_word("rho")) {
      i += 3;
      unsigned long k = number();
      if (k < 1 || k > rel.n()) fail("generator index out of range");
      GenDualPoly f(rel);
      f.set_component(Mask(1) << (k - 1), Poly::constant(Rat(1)));
      return f;
    }
    if (peek_word("C(") || peek_word("c(")) {
      i += 2;
      ws();
      if (i >= s.size() || (s[i] != 'X' && s[i] != 'x')) fail("expected 'X'");
      ++i;
      if (!eat(',')) fail("expected ','");
      unsigned long k = number();
      if (k > 512) fail("binomial index too large");
      if (!eat(')')) fail("expected ')'");
      return base(binomial_poly(k));
    }
    if (s[i] == 'X' || s[i] == 'x') {
      ++i;
      return base(Poly::x());
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      unsigned long num = number();
      Rat v(static_cast<unsigned long>(num));
      if (eat('/')) {
        unsigned long den = number();
        if (den == 0) fail("zero denominator");
        v = make_rat(Int(num), Int(den));
      }
      return base(Poly::constant(v));
    }
    fail("unexpected character");
  }

  GenDualPoly factor() {
    GenDualPoly p = primary();
    ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      unsigned long e = number();
      if (e > 512) fail("exponent too large");
      GenDualPoly acc = base(Poly::constant(Rat(1)));
      for (unsigned long j = 0; j < e; ++j) acc = acc * p;
      return acc;
    }
    return p;
  }

  GenDualPoly term() {
    GenDualPoly p = factor();
    for (;;) {
      ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  GenDualPoly expr() {
    ws();
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
    }
    GenDualPoly p = term();
    if (neg) p = GenDualPoly(rel) - p;
    for (;;) {
      ws();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        bool minus = s[i] == '-';
        ++i;
        GenDualPoly q = term();
        p = minus ? p - q : p + q;
      } else {
        return p;
      }
    }
  }
};

}  // namespace

GenDualPoly parse_gen_dual_poly(const std::string& text,
                                const RelationVector& rel) {
  check_relations(rel);
  ExtParser p{text, 0, rel};
  GenDualPoly f = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return f;
}

}  // namespace ivpoly
