#pragma once

#include <cstddef>
#include <vector>

#include "splinelab/kernels.hpp"
#include "splinelab/linalg.hpp"
#include "splinelab/spline.hpp"

namespace splinelab {

inline constexpr std::size_t kDefaultBudget = 20000;

struct OracleOptions {
  std::size_t budget_vars = kDefaultBudget;
  Exec exec = Exec::Parallel;
};

// Homogeneous degree-d splines as vectors: index rank(w) * M + monomial index.
SparseVec spline_to_vector(const Spline& rho, const MonomialIndex& mons);
Spline vector_to_spline(const SimpleGraph& g, const SparseVec& v, const MonomialIndex& mons);

struct SplineSpaceBasis {
  SimpleGraph graph;
  int degree = 0;
  MonomialIndex mons{1, 0};
  std::vector<SparseVec> vectors;
  // vectors[k] is 1 at readout[k] and 0 there for every other basis vector
  std::vector<std::size_t> readout;

  std::size_t dimension() const { return vectors.size(); }
  std::size_t ambient() const { return symmetric_group(graph.n()).size() * mons.size(); }
  std::vector<Spline> splines() const;
  std::vector<Rational> coordinates(const SparseVec& v) const;
  bool contains(const SparseVec& v) const;
  bool contains(const Spline& rho) const { return contains(spline_to_vector(rho, mons)); }
};

std::size_t oracle_vars(int n, int d);
SplineSpaceBasis splines_basis(const SimpleGraph& g, int d, const OracleOptions& opt = {});
std::size_t splines_dimension(const SimpleGraph& g, int d, const OracleOptions& opt = {});
bool subspace_equal(const SplineSpaceBasis& b1, const SplineSpaceBasis& b2);
std::size_t module_span_dimension(const SplineFamily& generators, int d, Side side,
                                  std::size_t budget_vars = kDefaultBudget);

}  // namespace splinelab
