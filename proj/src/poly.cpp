#include "ivpoly/poly.hpp"

#include <cctype>
#include <sstream>

namespace ivpoly {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::monomial(std::size_t k, const Rat& coeff) {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = coeff;
  return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] += o.c_[i];
  }
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> c = c_;
  for (auto& v : c) v = -v;
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
  std::vector<Rat> c = c_;
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

Poly Poly::operator/(const Rat& s) const {
  if (s == 0) throw std::invalid_argument("Poly: division by zero");
  std::vector<Rat> c = c_;
  for (auto& v : c) v /= s;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> c(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * Rat(static_cast<long>(k));
  return Poly(std::move(c));
}

Poly Poly::shifted(const Rat& c) const {
  // Horner: f(X+c) built from the top coefficient down.
  Poly xc(std::vector<Rat>{c, Rat(1)});
  Poly r;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * xc + Poly::constant(c_[k]);
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly r;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * g + Poly::constant(c_[k]);
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
  return r;
}

bool Poly::integer_coeffs() const {
  for (const auto& v : c_)
    if (!is_integer(v)) return false;
  return true;
}

Int Poly::denominator_lcm() const {
  Int l = 1;
  for (const auto& v : c_) l = lcm(l, v.get_den());
  return l;
}

void BinomPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool BinomPoly::integer_coeffs() const {
  for (const auto& v : c_)
    if (!is_integer(v)) return false;
  return true;
}

Poly binomial_poly(std::size_t k) {
  // C(X,0) = 1, C(X,k) = C(X,k-1) * (X-k+1) / k
  Poly r = Poly::constant(Rat(1));
  for (std::size_t i = 1; i <= k; ++i) {
    Poly lin(std::vector<Rat>{Rat(1) - Rat(static_cast<long>(i)), Rat(1)});
    r = (r * lin) / Rat(static_cast<long>(i));
  }
  return r;
}

BinomPoly to_binomial(const Poly& f) {
  // Newton forward differences: coefficient of C(X,k) is (Delta^k f)(0).
  const int d = f.degree();
  if (d < 0) return BinomPoly();
  std::vector<Rat> values(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) values[static_cast<std::size_t>(j)] = f.eval(Rat(j));
  std::vector<Rat> out(static_cast<std::size_t>(d) + 1, Rat(0));
  for (int k = 0; k <= d; ++k) {
    Rat ck = 0;
    for (int j = 0; j <= k; ++j) {
      Rat term = Rat(binomial(Int(k), static_cast<unsigned long>(j))) *
                 values[static_cast<std::size_t>(j)];
      if ((k - j) % 2) term = -term;
      ck += term;
    }
    out[static_cast<std::size_t>(k)] = ck;
  }
  return BinomPoly(std::move(out));
}

Poly from_binomial(const BinomPoly& f) {
  Poly r;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (f.coeffs()[k] == 0) continue;
    r = r + binomial_poly(k) * f.coeffs()[k];
  }
  return r;
}

/* ---------- printing ---------- */

namespace {

void print_term(std::ostringstream& os, bool first, const Rat& coeff,
                const std::string& sym) {
  Rat a = coeff;
  if (first) {
    if (a < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  if (sym.empty()) {
    os << a.get_str();
    return;
  }
  if (a != 1) os << a.get_str() << "*";
  os << sym;
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    std::string sym;
    if (k == 1)
      sym = "X";
    else if (k > 1)
      sym = "X^" + std::to_string(k);
    print_term(os, first, c_[k], sym);
    first = false;
  }
  return os.str();
}

std::string BinomPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    std::string sym;
    if (k >= 1) sym = "C(X," + std::to_string(k) + ")";
    print_term(os, first, c_[k], sym);
    first = false;
  }
  return os.str();
}

/* ---------- parsing ---------- */

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(i) +
                                ": " + what);
  }
};

Int parse_uint(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
    ++cur.i;
  if (cur.i == start) cur.fail("expected a number");
  return Int(cur.s.substr(start, cur.i - start));
}

std::size_t parse_index(Cursor& cur) {
  Int n = parse_uint(cur);
  if (n > 512) cur.fail("exponent too large");
  return static_cast<std::size_t>(n.get_ui());
}

Poly parse_atom(Cursor& cur) {
  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    Int num = parse_uint(cur);
    if (cur.accept('/')) {
      Int den = parse_uint(cur);
      if (den == 0) cur.fail("zero denominator");
      return Poly::constant(make_rat(num, den));
    }
    return Poly::constant(Rat(num));
  }
  if (c == 'X' || c == 'x') {
    ++cur.i;
    std::size_t k = 1;
    if (cur.accept('^')) k = parse_index(cur);
    return Poly::monomial(k, Rat(1));
  }
  if (c == 'C' || c == 'c') {
    ++cur.i;
    cur.expect('(');
    cur.skip_ws();
    if (cur.peek() != 'X' && cur.peek() != 'x') cur.fail("expected X in C(X,k)");
    ++cur.i;
    cur.expect(',');
    std::size_t k = parse_index(cur);
    cur.expect(')');
    return binomial_poly(k);
  }
  if (c == '(') {
    cur.fail("parenthesized subexpressions are not part of this syntax");
  }
  cur.fail("expected a coefficient, X, or C(X,k)");
}

Poly parse_term(Cursor& cur) {
  Poly p = parse_atom(cur);
  while (cur.accept('*')) p = p * parse_atom(cur);
  return p;
}

}  // namespace

Poly parse_poly(const std::string& text) {
  Cursor cur{text};
  if (cur.eof()) cur.fail("empty input");
  Poly result;
  int sign = 1;
  if (cur.accept('-'))
    sign = -1;
  else
    cur.accept('+');
  for (;;) {
    Poly t = parse_term(cur);
    result = sign < 0 ? result - t : result + t;
    if (cur.eof()) break;
    if (cur.accept('+'))
      sign = 1;
    else if (cur.accept('-'))
      sign = -1;
    else
      cur.fail("expected '+' or '-' between terms");
  }
  return result;
}

}  // namespace ivpoly
