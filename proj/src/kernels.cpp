#include "splinelab/kernels.hpp"

#include <map>

namespace splinelab {

namespace {

EdgeConstraints edge_block(const CayleyEdge& e, const MonomialIndex& mons) {
  EdgeConstraints out;
  std::size_t M = mons.size();
  std::map<Monomial, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < M; ++k) {
    Monomial m = mons[k];
    m.e[e.a - 1] = static_cast<std::uint8_t>(m.e[e.a - 1] + m.e[e.b - 1]);
    m.e[e.b - 1] = 0;
    groups[m].push_back(k);
  }
  for (const auto& [img, ks] : groups) {
    if (ks.size() == 1) {
      out.equalities.emplace_back(e.w * M + ks[0], e.v * M + ks[0]);
      continue;
    }
    SparseVec row;
    for (std::size_t k : ks) {
      row.emplace_back(e.w * M + k, 1);
      row.emplace_back(e.v * M + k, -1);
    }
    normalize(row);
    out.sums.push_back(std::move(row));
  }
  return out;
}

}  // namespace

EdgeConstraints assemble_constraints(const LabeledCayleyGraph& cg, const MonomialIndex& mons, Exec exec) {
  auto blocks = map_indexed<EdgeConstraints>(
      cg.edges.size(), [&](std::size_t k) { return edge_block(cg.edges[k], mons); }, exec);
  EdgeConstraints all;
  for (auto& b : blocks) {
    all.equalities.insert(all.equalities.end(), b.equalities.begin(), b.equalities.end());
    for (auto& r : b.sums) all.sums.push_back(std::move(r));
  }
  return all;
}

}  // namespace splinelab
