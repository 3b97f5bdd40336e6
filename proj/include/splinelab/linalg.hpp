#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "splinelab/poly.hpp"

namespace splinelab {

// sorted by column, no stored zeros
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec sparse_from_dense(const std::vector<Rational>& v);
std::vector<Rational> dense_from_sparse(const SparseVec& v, std::size_t cols);
Rational sparse_at(const SparseVec& v, std::size_t col);
// x + c*y
SparseVec axpy(const SparseVec& x, const Rational& c, const SparseVec& y);
void normalize(SparseVec& v);  // sort, merge duplicates, drop zeros

struct RationalMatrix {
  std::size_t cols = 0;
  std::vector<SparseVec> rows;
};

// Incrementally maintained reduced row echelon form.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols), pivot_row_(cols, npos), col_rows_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  // residual of v after reduction by the current rows
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // returns true if v was independent and was added
  bool add(const SparseVec& v);

  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t c) const { return pivot_row_[c] != npos; }
  // kernel of the row space, one vector per free column (1 there, 0 on other free columns)
  std::vector<SparseVec> kernel() const;
  std::vector<std::size_t> free_columns() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t cols_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
  std::vector<std::vector<std::size_t>> col_rows_;  // may hold stale entries
};

struct RankKernel {
  std::size_t rank;
  std::vector<SparseVec> kernel;
};

RankKernel rank_kernel(const RationalMatrix& m);
std::size_t rank_of(const std::vector<SparseVec>& vecs, std::size_t cols);

}  // namespace splinelab
