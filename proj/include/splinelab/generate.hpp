#pragma once

#include <random>
#include <vector>

#include "splinelab/graph.hpp"

namespace splinelab {

// every connected graph on [n], ordered by edge bitmask over lexicographic pairs
std::vector<SimpleGraph> all_connected_graphs(int n);
// uniform spanning tree of K_n plus each remaining edge with probability 1/2
SimpleGraph random_connected_graph(int n, std::mt19937_64& rng);
SimpleGraph random_tree(int n, std::mt19937_64& rng);
Permutation random_permutation(int n, std::mt19937_64& rng);

}  // namespace splinelab
