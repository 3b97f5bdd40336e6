#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "splinelab/linalg.hpp"
#include "splinelab/perm.hpp"
#include "splinelab/poly.hpp"

namespace splinelab {

// Parallel kernels. Each has a serial reference path selected by Exec::Serial;
// both paths return identical results.
enum class Exec { Serial, Parallel };

struct EdgeConstraints {
  std::vector<std::pair<std::size_t, std::size_t>> equalities;  // x_a = x_b
  std::vector<SparseVec> sums;                                  // sum rows = 0
};

// coordinates: rank(w) * mons.size() + monomial index
EdgeConstraints assemble_constraints(const LabeledCayleyGraph& cg, const MonomialIndex& mons,
                                     Exec exec = Exec::Parallel);

// Applies f(k) to k = 0..count-1 and returns the results in order.
template <class T, class F>
std::vector<T> map_indexed(std::size_t count, F&& f, Exec exec = Exec::Parallel);

}  // namespace splinelab

#include "splinelab/kernels_impl.hpp"
