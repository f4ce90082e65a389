#include "ivpoly/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace ivpoly {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& v) {
  MultiPoly p(nvars);
  p.add_term(Key(nvars, 0), v);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
  MultiPoly p(nvars);
  Key k(nvars, 0);
  k.at(var) = 1;
  p.add_term(k, Rat(1));
  return p;
}

MultiPoly MultiPoly::from_poly(const Poly& f, std::size_t nvars, std::size_t var) {
  MultiPoly p(nvars);
  Key k(nvars, 0);
  for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
    if (f.coeffs()[e] == 0) continue;
    k.at(var) = static_cast<unsigned>(e);
    p.add_term(k, f.coeffs()[e]);
  }
  return p;
}

void MultiPoly::add_term(const Key& k, const Rat& v) {
  if (k.size() != nvars_)
    throw std::invalid_argument("MultiPoly::add_term: arity mismatch");
  if (v == 0) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, v);
  } else {
    it->second += v;
    if (it->second == 0) t_.erase(it);
  }
}

Rat MultiPoly::coeff(const Key& k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Rat(0) : it->second;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [k, v] : t_) d = std::max(d, k[var]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [k, v] : t_) {
    unsigned s = 0;
    for (unsigned e : k) s += e;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r = *this;
  for (const auto& [k, v] : o.t_) r.add_term(k, v);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [k, v] : t_) r.t_.emplace(k, -v);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r(nvars_);
  for (const auto& [ka, va] : t_)
    for (const auto& [kb, vb] : o.t_) {
      Key k(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) k[i] = ka[i] + kb[i];
      r.add_term(k, va * vb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
  MultiPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [k, v] : t_) r.t_.emplace(k, v * s);
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("MultiPoly::eval: arity mismatch");
  Rat total = 0;
  for (const auto& [k, v] : t_) {
    Rat term = v;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (k[i]) term *= qpow(point[i], k[i]);
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::eval_var(std::size_t var, const Rat& value) const {
  MultiPoly r(nvars_);
  for (const auto& [k, v] : t_) {
    Key nk = k;
    nk[var] = 0;
    r.add_term(nk, v * qpow(value, k[var]));
  }
  return r;
}

MultiPoly MultiPoly::substitute_all(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_)
    throw std::invalid_argument("MultiPoly::substitute_all: one image per variable");
  std::size_t out_vars = images.empty() ? 0 : images[0].nvars();
  for (const auto& g : images)
    if (g.nvars() != out_vars)
      throw std::invalid_argument("MultiPoly::substitute_all: image arity mismatch");
  // Memoized powers of each image.
  std::vector<std::vector<MultiPoly>> pows(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    pows[i].push_back(MultiPoly::constant(out_vars, Rat(1)));
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * images[i]);
    return pows[i][e];
  };
  MultiPoly r(out_vars);
  for (const auto& [k, v] : t_) {
    MultiPoly term = MultiPoly::constant(out_vars, v);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (k[i]) term = term * power(i, k[i]);
    r = r + term;
  }
  return r;
}

Poly MultiPoly::to_poly(std::size_t var) const {
  std::vector<Rat> c(degree_in(var) + 1, Rat(0));
  for (const auto& [k, v] : t_) {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var && k[i] != 0)
        throw std::invalid_argument("MultiPoly::to_poly: not univariate in that slot");
    c[k[var]] += v;
  }
  return Poly(std::move(c));
}

MultiPoly MultiPoly::swap_vars(std::size_t a, std::size_t b) const {
  MultiPoly r(nvars_);
  for (const auto& [k, v] : t_) {
    Key nk = k;
    std::swap(nk[a], nk[b]);
    r.add_term(nk, v);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.get_str() << ")";
    for (std::size_t i = 0; i < nvars_; ++i)
      if (k[i]) {
        os << "*x" << i;
        if (k[i] > 1) os << "^" << k[i];
      }
  }
  return os.str();
}

namespace {

/* Coefficient-vector transforms along one variable, applied groupwise.
 * monomial -> binomial uses Stirling numbers of the second kind
 * (X^e = sum_k S2(e,k) k! C(X,k)); the inverse expands falling factorials. */

std::vector<std::vector<Int>> stirling2_table(unsigned d) {
  std::vector<std::vector<Int>> s(d + 1, std::vector<Int>(d + 1, Int(0)));
  s[0][0] = 1;
  for (unsigned e = 1; e <= d; ++e)
    for (unsigned k = 1; k <= e; ++k)
      s[e][k] = Int(k) * s[e - 1][k] + s[e - 1][k - 1];
  return s;
}

std::vector<std::vector<Rat>> binom_poly_coeff_table(unsigned d) {
  // row k = monomial coefficients of C(X,k)
  std::vector<std::vector<Rat>> t(d + 1);
  for (unsigned k = 0; k <= d; ++k) {
    const Poly p = binomial_poly(k);
    t[k].assign(k + 1, Rat(0));
    for (std::size_t e = 0; e < p.coeffs().size(); ++e) t[k][e] = p.coeffs()[e];
  }
  return t;
}

template <typename TransformCoeffVec>
MultiPoly transform_variable(const MultiPoly& f, std::size_t var,
                             TransformCoeffVec&& tr) {
  // Group terms by the key with `var` zeroed, transform each group's
  // coefficient vector along `var`, reassemble.
  std::map<MultiPoly::Key, std::vector<Rat>> groups;
  for (const auto& [k, v] : f.terms()) {
    MultiPoly::Key base = k;
    unsigned e = base[var];
    base[var] = 0;
    auto& vec = groups[base];
    if (vec.size() <= e) vec.resize(e + 1, Rat(0));
    vec[e] += v;
  }
  MultiPoly out(f.nvars());
  for (auto& [base, vec] : groups) {
    std::vector<Rat> nv = tr(vec);
    MultiPoly::Key k = base;
    for (std::size_t e = 0; e < nv.size(); ++e) {
      if (nv[e] == 0) continue;
      k[var] = static_cast<unsigned>(e);
      out.add_term(k, nv[e]);
    }
  }
  return out;
}

}  // namespace

MultiPoly to_tensor_binomial(const MultiPoly& f) {
  MultiPoly r = f;
  for (std::size_t var = 0; var < f.nvars(); ++var) {
    unsigned d = r.degree_in(var);
    auto s2 = stirling2_table(d);
    r = transform_variable(r, var, [&](const std::vector<Rat>& a) {
      std::vector<Rat> b(a.size(), Rat(0));
      for (std::size_t e = 0; e < a.size(); ++e) {
        if (a[e] == 0) continue;
        for (std::size_t k = 0; k <= e; ++k)
          b[k] += a[e] * Rat(s2[e][k] * factorial(k));
      }
      return b;
    });
  }
  return r;
}

MultiPoly from_tensor_binomial(const MultiPoly& f) {
  MultiPoly r = f;
  for (std::size_t var = 0; var < f.nvars(); ++var) {
    unsigned d = r.degree_in(var);
    auto bp = binom_poly_coeff_table(d);
    r = transform_variable(r, var, [&](const std::vector<Rat>& b) {
      std::vector<Rat> a(b.size(), Rat(0));
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] == 0) continue;
        for (std::size_t e = 0; e <= k; ++e) a[e] += b[k] * bp[k][e];
      }
      return a;
    });
  }
  return r;
}

std::optional<MultiPoly::Key> non_integral_index(const MultiPoly& f) {
  MultiPoly b = to_tensor_binomial(f);
  bool found = false;
  MultiPoly::Key best;
  unsigned best_total = 0;
  for (const auto& [k, v] : b.terms()) {
    if (is_integer(v)) continue;
    unsigned tot = 0;
    for (unsigned e : k) tot += e;
    if (!found || tot < best_total || (tot == best_total && k < best)) {
      found = true;
      best = k;
      best_total = tot;
    }
  }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace ivpoly
