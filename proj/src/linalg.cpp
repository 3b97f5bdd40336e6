#include "splinelab/linalg.hpp"

#include <algorithm>

#include "splinelab/error.hpp"

namespace splinelab {

SparseVec sparse_from_dense(const std::vector<Rational>& v) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.emplace_back(k, v[k]);
  return out;
}

std::vector<Rational> dense_from_sparse(const SparseVec& v, std::size_t cols) {
  std::vector<Rational> out(cols);
  for (const auto& [c, x] : v) out.at(c) = x;
  return out;
}

Rational sparse_at(const SparseVec& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? it->second : Rational(0);
}

namespace {

bool has_col(const SparseVec& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return it != v.end() && it->first == col;
}

}  // namespace

SparseVec axpy(const SparseVec& x, const Rational& c, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, c * y[j].second);
      ++j;
    } else {
      Rational s = x[i].second + c * y[j].second;
      if (s != 0) out.emplace_back(x[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [c, x] : v) {
    if (!out.empty() && out.back().first == c)
      out.back().second += x;
    else
      out.emplace_back(c, x);
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  v = std::move(out);
}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  SparseVec r = v;
  // rows are fully reduced, so subtracting one never touches another pivot column
  for (const auto& [c, x] : v) {
    if (c >= cols_) throw Error(ErrorKind::BadIndex, "column out of range");
    std::size_t p = pivot_row_[c];
    if (p != npos) r = axpy(r, -x, rows_[p]);
  }
  return r;
}

bool EchelonBasis::add(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  // pick the entry whose column is shared with the fewest rows
  std::size_t best = 0;
  for (std::size_t k = 1; k < r.size(); ++k)
    if (col_rows_[r[k].first].size() < col_rows_[r[best].first].size()) best = k;
  std::size_t pc = r[best].first;
  Rational inv = 1 / r[best].second;
  for (auto& e : r) e.second *= inv;
  std::size_t idx = rows_.size();
  for (std::size_t ri : col_rows_[pc]) {
    SparseVec& row = rows_[ri];
    Rational x = sparse_at(row, pc);
    if (x == 0) continue;
    SparseVec old = std::move(row);
    row = axpy(old, -x, r);
    for (const auto& [c, y] : row)
      if (!has_col(old, c)) col_rows_[c].push_back(ri);
  }
  col_rows_[pc].clear();
  for (const auto& [c, y] : r) col_rows_[c].push_back(idx);
  pivot_row_[pc] = idx;
  pivots_.push_back(pc);
  rows_.push_back(std::move(r));
  return true;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] == npos) out.push_back(c);
  return out;
}

std::vector<SparseVec> EchelonBasis::kernel() const {
  std::vector<std::size_t> freec = free_columns();
  std::vector<std::size_t> slot(cols_, npos);
  for (std::size_t k = 0; k < freec.size(); ++k) slot[freec[k]] = k;
  std::vector<SparseVec> ker(freec.size());
  for (std::size_t k = 0; k < freec.size(); ++k) ker[k].emplace_back(freec[k], 1);
  for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
    std::size_t p = pivots_[ri];
    for (const auto& [c, x] : rows_[ri])
      if (c != p) ker[slot[c]].emplace_back(p, -x);
  }
  for (auto& v : ker) normalize(v);
  return ker;
}

RankKernel rank_kernel(const RationalMatrix& m) {
  EchelonBasis eb(m.cols);
  for (const auto& row : m.rows) eb.add(row);
  return {eb.rank(), eb.kernel()};
}

std::size_t rank_of(const std::vector<SparseVec>& vecs, std::size_t cols) {
  EchelonBasis eb(cols);
  for (const auto& v : vecs) eb.add(v);
  return eb.rank();
}

}  // namespace splinelab
