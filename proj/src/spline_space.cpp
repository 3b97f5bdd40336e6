#include "splinelab/spline_space.hpp"

#include <algorithm>
#include <numeric>

#include "splinelab/error.hpp"

namespace splinelab {

SparseVec spline_to_vector(const Spline& rho, const MonomialIndex& mons) {
  if (rho.n() != mons.n()) throw Error(ErrorKind::SizeMismatch, "spline_to_vector");
  std::size_t M = mons.size();
  SparseVec v;
  for (std::size_t r = 0; r < rho.values().size(); ++r)
    for (const auto& [m, c] : rho.at_rank(r).terms()) {
      if (m.degree() != mons.degree())
        throw Error(ErrorKind::SizeMismatch, "spline is not homogeneous of degree " + std::to_string(mons.degree()));
      v.emplace_back(r * M + mons.index(m), c);
    }
  normalize(v);
  return v;
}

Spline vector_to_spline(const SimpleGraph& g, const SparseVec& v, const MonomialIndex& mons) {
  std::size_t M = mons.size();
  std::vector<Poly> vals(symmetric_group(g.n()).size(), Poly(g.n()));
  for (const auto& [idx, c] : v) vals[idx / M] += Poly::monomial(g.n(), mons[idx % M], c);
  return Spline(g, std::move(vals));
}

std::vector<Spline> SplineSpaceBasis::splines() const {
  std::vector<Spline> out;
  for (const auto& v : vectors) out.push_back(vector_to_spline(graph, v, mons));
  return out;
}

std::vector<Rational> SplineSpaceBasis::coordinates(const SparseVec& v) const {
  std::vector<Rational> c;
  c.reserve(readout.size());
  for (std::size_t idx : readout) c.push_back(sparse_at(v, idx));
  return c;
}

bool SplineSpaceBasis::contains(const SparseVec& v) const {
  std::vector<Rational> c = coordinates(v);
  SparseVec rebuilt;
  for (std::size_t k = 0; k < vectors.size(); ++k)
    if (c[k] != 0) rebuilt = axpy(rebuilt, c[k], vectors[k]);
  return rebuilt == v;
}

std::size_t oracle_vars(int n, int d) {
  if (n > kMaxN || n > 8) return static_cast<std::size_t>(-1);
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  // C(n+d-1, d)
  std::size_t c = 1;
  for (int i = 1; i <= d; ++i) c = c * (n + i - 1) / i;
  return f * c;
}

SplineSpaceBasis splines_basis(const SimpleGraph& g, int d, const OracleOptions& opt) {
  int n = g.n();
  if (d < 0) throw Error(ErrorKind::BadIndex, "negative degree");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "splines_basis");
  std::size_t vars = oracle_vars(n, d);
  if (vars > opt.budget_vars)
    throw Error(ErrorKind::BudgetExceeded, "n=" + std::to_string(n) + ", d=" + std::to_string(d) + " needs " +
                                               std::to_string(vars) + " variables, budget " +
                                               std::to_string(opt.budget_vars));
  SplineSpaceBasis out;
  out.graph = g;
  out.degree = d;
  out.mons = MonomialIndex(n, d);
  LabeledCayleyGraph cg = cayley_graph(g, std::max(n, kDefaultCap));
  EdgeConstraints ec = assemble_constraints(cg, out.mons, opt.exec);

  // equalities collapse into classes before elimination
  std::vector<std::size_t> parent(vars);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : ec.equalities) {
    std::size_t ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::size_t> reduced(vars, EchelonBasis::npos), rep;
  for (std::size_t x = 0; x < vars; ++x)
    if (find(x) == x) {
      reduced[x] = rep.size();
      rep.push_back(x);
    }
  EchelonBasis eb(rep.size());
  for (const SparseVec& row : ec.sums) {
    SparseVec r;
    for (const auto& [c, x] : row) r.emplace_back(reduced[find(c)], x);
    normalize(r);
    if (!r.empty()) eb.add(r);
  }
  std::vector<SparseVec> ker = eb.kernel();
  std::vector<std::size_t> freec = eb.free_columns();

  std::vector<std::vector<std::size_t>> members(rep.size());
  for (std::size_t x = 0; x < vars; ++x) members[reduced[find(x)]].push_back(x);
  for (std::size_t k = 0; k < ker.size(); ++k) {
    SparseVec full;
    for (const auto& [c, x] : ker[k])
      for (std::size_t idx : members[c]) full.emplace_back(idx, x);
    normalize(full);
    out.vectors.push_back(std::move(full));
    out.readout.push_back(rep[freec[k]]);
  }
  return out;
}

std::size_t splines_dimension(const SimpleGraph& g, int d, const OracleOptions& opt) {
  return splines_basis(g, d, opt).dimension();
}

bool subspace_equal(const SplineSpaceBasis& b1, const SplineSpaceBasis& b2) {
  if (b1.graph.n() != b2.graph.n() || b1.degree != b2.degree)
    throw Error(ErrorKind::SizeMismatch, "subspace_equal needs the same n and degree");
  if (b1.dimension() != b2.dimension()) return false;
  for (const auto& v : b2.vectors)
    if (!b1.contains(v)) return false;
  return true;
}

std::size_t module_span_dimension(const SplineFamily& generators, int d, Side side, std::size_t budget_vars) {
  if (generators.members.empty()) return 0;
  int n = generators.members.front().spline.n();
  if (oracle_vars(n, d) > budget_vars) throw Error(ErrorKind::BudgetExceeded, "module_span_dimension");
  MonomialIndex target(n, d);
  EchelonBasis eb(oracle_vars(n, d));
  for (const auto& [tag, gen] : generators.members) {
    if (gen.is_zero()) continue;
    if (!gen.is_homogeneous()) throw Error(ErrorKind::MalformedInput, "generator " + tag + " is not homogeneous");
    int e = gen.degree();
    if (e > d) continue;
    MonomialIndex mult(n, d - e);
    for (const Monomial& m : mult.monomials())
      eb.add(spline_to_vector(module_action(side, Poly::monomial(n, m), gen), target));
  }
  return eb.rank();
}

}  // namespace splinelab
