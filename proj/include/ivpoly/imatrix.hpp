#pragma once
/* Dense integer matrices and the row-style Hermite normal form used to
 * canonicalize every lattice in this project.
 *
 * HNF convention: the pivot of a row is its rightmost nonzero entry; rows are
 * sorted by increasing pivot column; pivots are positive; in each pivot
 * column the entries of later rows lie in [0, pivot). Zero rows are dropped.
 * With binomial-coordinate lattices this puts the basis polynomial of degree
 * k in row k with its leading coefficient as the pivot. */

#include <cstddef>
#include <vector>

#include "ivpoly/numeric.hpp"

namespace ivpoly {

class IMatrix {
 public:
  IMatrix() = default;
  IMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IMatrix identity(std::size_t n);
  static IMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  void append_row(const std::vector<Int>& r);

  void swap_rows(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  /* row[dst] += c * row[src] */
  void addmul_row(std::size_t dst, std::size_t src, const Int& c);

  bool is_zero_row(std::size_t i) const;

  bool operator==(const IMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IMatrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/* Canonical row-lattice form; see convention above. */
IMatrix hnf(const IMatrix& m);

/* Column index of a row's rightmost nonzero entry, or -1 for a zero row. */
long pivot_column(const IMatrix& m, std::size_t i);

/* Same row lattice? Throws std::invalid_argument on column-count mismatch. */
bool lattice_equal(const IMatrix& a, const IMatrix& b);

/* Membership of v in the row lattice of `basis` (need not be in HNF yet). */
bool lattice_contains(const IMatrix& basis, const std::vector<Int>& v);

/* HNF basis of { c in Z^n : (A c)_r === 0 mod mods[r] for every row r }.
 * A is q x n; mods has one entry per row of A. A modulus of 0 makes the row
 * an exact equation, a modulus of 1 makes it vacuous. */
IMatrix congruence_lattice_basis(const IMatrix& a, const std::vector<Int>& mods);

}  // namespace ivpoly
