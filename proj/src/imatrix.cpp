#include "ivpoly/imatrix.hpp"

#include <algorithm>
#include <sstream>

namespace ivpoly {

IMatrix IMatrix::identity(std::size_t n) {
  IMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMatrix IMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IMatrix();
  std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols)
      throw std::invalid_argument("IMatrix::from_rows: ragged rows");
  IMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<Int> IMatrix::row(std::size_t i) const {
  return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void IMatrix::append_row(const std::vector<Int>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_)
    throw std::invalid_argument("IMatrix::append_row: width mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

void IMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IMatrix::addmul_row(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

bool IMatrix::is_zero_row(std::size_t i) const {
  for (std::size_t k = 0; k < cols_; ++k)
    if (at(i, k) != 0) return false;
  return true;
}

std::string IMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

long pivot_column(const IMatrix& m, std::size_t i) {
  for (long j = static_cast<long>(m.cols()) - 1; j >= 0; --j)
    if (m.at(i, static_cast<std::size_t>(j)) != 0) return j;
  return -1;
}

IMatrix hnf(const IMatrix& input) {
  IMatrix m = input;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t lim = R;  // rows [lim, R) are finalized, pivot columns ascending upward

  for (long col = static_cast<long>(C) - 1; col >= 0; --col) {
    const std::size_t c = static_cast<std::size_t>(col);
    // Euclid within rows [0, lim) until at most one nonzero entry remains in c.
    for (;;) {
      std::size_t nonzero = 0, last = 0;
      for (std::size_t i = 0; i < lim; ++i)
        if (m.at(i, c) != 0) {
          ++nonzero;
          last = i;
        }
      if (nonzero <= 1) {
        if (nonzero == 0) goto next_column;
        // Move the surviving row to the top of the finalized block.
        --lim;
        m.swap_rows(last, lim);
        break;
      }
      std::size_t best = lim;
      for (std::size_t i = 0; i < lim; ++i) {
        if (m.at(i, c) == 0) continue;
        if (best == lim || cmp(abs(m.at(i, c)), abs(m.at(best, c))) < 0) best = i;
      }
      if (m.at(best, c) < 0) m.negate_row(best);
      const Int p = m.at(best, c);
      for (std::size_t i = 0; i < lim; ++i) {
        if (i == best || m.at(i, c) == 0) continue;
        m.addmul_row(i, best, -floor_div(m.at(i, c), p));
      }
    }
    if (m.at(lim, c) < 0) m.negate_row(lim);
    // Reduce the pivot column in all later (already finalized) rows into [0, pivot).
    for (std::size_t i = lim + 1; i < R; ++i)
      m.addmul_row(i, lim, -floor_div(m.at(i, c), m.at(lim, c)));
  next_column:;
  }

  IMatrix out(R - lim, C);
  for (std::size_t i = lim; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out.at(i - lim, j) = m.at(i, j);
  return out;
}

bool lattice_equal(const IMatrix& a, const IMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("lattice_equal: dimension mismatch");
  return hnf(a) == hnf(b);
}

bool lattice_contains(const IMatrix& basis, const std::vector<Int>& v) {
  if (v.size() != basis.cols())
    throw std::invalid_argument("lattice_contains: dimension mismatch");
  IMatrix h = hnf(basis);
  std::vector<Int> w = v;
  // Triangular reduction from the highest pivot column down.
  for (std::size_t ri = h.rows(); ri-- > 0;) {
    long pc = pivot_column(h, ri);
    if (pc < 0) continue;
    const Int& p = h.at(ri, static_cast<std::size_t>(pc));
    const Int& entry = w[static_cast<std::size_t>(pc)];
    if (entry == 0) continue;
    if (entry % p != 0) return false;
    Int q = entry / p;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * h.at(ri, j);
  }
  for (const Int& x : w)
    if (x != 0) return false;
  return true;
}

IMatrix congruence_lattice_basis(const IMatrix& a, const std::vector<Int>& mods) {
  const std::size_t q = a.rows(), n = a.cols();
  if (mods.size() != q)
    throw std::invalid_argument("congruence_lattice_basis: one modulus per row required");
  // Stack generators (e_i | A e_i) with scaled congruence rows (0 | m_r e_r);
  // rows of the HNF whose pivot lands in the identity block are the answer.
  IMatrix stack(n + q, n + q);
  for (std::size_t i = 0; i < n; ++i) {
    stack.at(i, i) = 1;
    for (std::size_t r = 0; r < q; ++r) stack.at(i, n + r) = a.at(r, i);
  }
  for (std::size_t r = 0; r < q; ++r) stack.at(n + r, n + r) = abs(mods[r]);
  IMatrix h = hnf(stack);
  IMatrix out;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    long pc = pivot_column(h, i);
    if (pc < 0 || pc >= static_cast<long>(n)) continue;
    std::vector<Int> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = h.at(i, j);
    out.append_row(r);
  }
  if (out.rows() == 0) out = IMatrix(0, n);
  return out;
}

}  // namespace ivpoly
