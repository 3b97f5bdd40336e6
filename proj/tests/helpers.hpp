#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "splinelab/error.hpp"
#include "splinelab/graph.hpp"
#include "splinelab/perm.hpp"

namespace th {

using namespace splinelab;

inline Permutation P(const char* s) { return Permutation::from_one_line(s); }

inline SimpleGraph G(int n, std::vector<std::pair<int, int>> es) { return SimpleGraph(n, es); }

inline oracle::Graph raw(const SimpleGraph& g) {
  oracle::Graph out;
  for (Edge e : g.edges()) out.emplace_back(e.i, e.j);
  return out;
}

inline SimpleGraph cycle4() { return G(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

// twelve vertices, three 4-cycles around two bridges
inline SimpleGraph block_cut_example() {
  return G(12, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 9}, {5, 6}, {6, 7}, {7, 8}, {5, 8},
                {9, 10}, {10, 11}, {11, 12}, {9, 12}});
}

inline SimpleGraph dim_blockcut_example() {
  return G(12, {{4, 7}, {4, 6}, {4, 11}, {6, 11}, {4, 12}, {1, 12}, {1, 4}, {9, 10}, {1, 9}, {1, 10},
                {1, 2}, {2, 3}, {2, 5}, {2, 8}, {5, 8}});
}

inline SimpleGraph linear_example_11() {
  return G(12, {{1, 4}, {2, 4}, {3, 4}, {2, 3}, {4, 5}, {5, 8}, {4, 8}, {6, 7}, {6, 8}, {7, 8},
                {8, 10}, {9, 10}, {10, 11}, {10, 12}, {11, 12}});
}

inline SimpleGraph type_a_example() {
  return G(12, {{1, 4}, {2, 4}, {3, 4}, {2, 3}, {4, 5}, {5, 8}, {4, 8}, {6, 7}, {6, 8}, {7, 8},
                {8, 11}, {9, 11}, {10, 11}, {11, 12}});
}

inline SimpleGraph type_b_relabel_example() {
  return G(12, {{9, 10}, {10, 12}, {10, 11}, {11, 12}, {8, 10}, {7, 8}, {7, 10}, {5, 6}, {6, 7},
                {5, 7}, {4, 7}, {3, 4}, {2, 4}, {1, 4}});
}

inline std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& v) { return {v.begin(), v.end()}; }

}  // namespace th
