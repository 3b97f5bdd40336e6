#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "splinelab/perm.hpp"

namespace splinelab {

struct Edge {
  int i, j;  // i < j
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int a, int b);

class SimpleGraph {
 public:
  SimpleGraph() = default;
  // rejects loops, duplicates, out of range endpoints (MalformedInput)
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);
  SimpleGraph(int n, const std::vector<Edge>& edges);

  static SimpleGraph complete(int n);
  static SimpleGraph path(int n);
  static SimpleGraph star(int n);  // center n

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int a, int b) const;

  // edge (phi(i), phi(j)); phi given as a permutation of [n]
  SimpleGraph relabeled(const Permutation& phi) const;
  SimpleGraph with_edge(int a, int b) const;
  SimpleGraph without_last_vertex() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // 1-based, sorted
};

// Components of g with the vertices flagged in `removed` deleted; each sorted, ordered by min vertex.
std::vector<std::vector<int>> components(const SimpleGraph& g, const std::vector<bool>& removed = {});
bool is_connected(const SimpleGraph& g);
bool is_tree(const SimpleGraph& g);

struct Connectivity {
  bool connected;
  int k;
};
Connectivity connectivity(const SimpleGraph& g);

struct BlockCutData {
  std::vector<int> cut_vertices;
  std::vector<std::vector<int>> blocks;             // sorted vertex sets, lexicographic order
  std::vector<std::pair<int, int>> tree_edges;      // (cut vertex, block index)
  std::vector<int> leaf_blocks;
  std::vector<int> internal_blocks;
  std::vector<Edge> internal_cut_edges;
  std::vector<int> c_map;                           // size n+1
};
BlockCutData block_cut(const SimpleGraph& g);

struct CutEdge {
  Edge edge;
  std::vector<int> side;  // component of g - edge containing edge.i
};
std::vector<CutEdge> cut_edges(const SimpleGraph& g);
bool is_cut_edge(const SimpleGraph& g, Edge s);

SimpleGraph cliqued_version(const SimpleGraph& g);
bool is_cliqued(const SimpleGraph& g);

// phi(i) = new label of i
Permutation natural_labeling(const SimpleGraph& g);
bool is_naturally_labeled(const SimpleGraph& g);

struct DominantPairs {
  std::vector<Edge> strong;
  std::vector<Edge> weak;
};
DominantPairs dominant_pairs(const SimpleGraph& g);

struct CutDecomposition {
  int j;
  std::map<int, std::vector<int>> components;  // key 0 holds n
};
CutDecomposition cut_decomposition(const SimpleGraph& g, int j);

enum class GraphType { A, B, C };
GraphType graph_type(const SimpleGraph& g);
char graph_type_name(GraphType t);

}  // namespace splinelab
