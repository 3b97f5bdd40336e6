#include "splinelab/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "splinelab/error.hpp"

namespace splinelab {

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorKind::MalformedInput, "loop at vertex " + std::to_string(a));
    es.push_back(make_edge(a, b));
  }
  *this = SimpleGraph(n, es);
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 1) throw Error(ErrorKind::MalformedInput, "vertex count must be positive");
  adj_.assign(n + 1, {});
  for (Edge e : edges) {
    if (e.i == e.j) throw Error(ErrorKind::MalformedInput, "loop at vertex " + std::to_string(e.i));
    e = make_edge(e.i, e.j);
    if (e.i < 1 || e.j > n)
      throw Error(ErrorKind::MalformedInput,
                  "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") out of range");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 1; k < edges_.size(); ++k)
    if (edges_[k] == edges_[k - 1])
      throw Error(ErrorKind::MalformedInput, "duplicate edge (" + std::to_string(edges_[k].i) + "," +
                                                 std::to_string(edges_[k].j) + ")");
  for (Edge e : edges_) {
    adj_[e.i].push_back(e.j);
    adj_[e.j].push_back(e.i);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
  return SimpleGraph(n, es);
}

SimpleGraph SimpleGraph::path(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
  return SimpleGraph(n, es);
}

SimpleGraph SimpleGraph::star(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.push_back({i, n});
  return SimpleGraph(n, es);
}

bool SimpleGraph::has_edge(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

SimpleGraph SimpleGraph::relabeled(const Permutation& phi) const {
  if (phi.n() != n_) throw Error(ErrorKind::SizeMismatch, "relabel");
  std::vector<Edge> es;
  for (Edge e : edges_) es.push_back(make_edge(phi(e.i), phi(e.j)));
  return SimpleGraph(n_, es);
}

SimpleGraph SimpleGraph::with_edge(int a, int b) const {
  if (has_edge(a, b)) return *this;
  std::vector<Edge> es = edges_;
  es.push_back(make_edge(a, b));
  return SimpleGraph(n_, es);
}

SimpleGraph SimpleGraph::without_last_vertex() const {
  std::vector<Edge> es;
  for (Edge e : edges_)
    if (e.j != n_) es.push_back(e);
  return SimpleGraph(n_ - 1, es);
}

std::vector<std::vector<int>> components(const SimpleGraph& g, const std::vector<bool>& removed) {
  int n = g.n();
  auto gone = [&](int v) { return !removed.empty() && removed[v]; };
  std::vector<int> comp(n + 1, -1);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (gone(s) || comp[s] >= 0) continue;
    std::vector<int> c{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < c.size(); ++k)
      for (int u : g.neighbors(c[k]))
        if (!gone(u) && comp[u] < 0) {
          comp[u] = comp[s];
          c.push_back(u);
        }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return components(g).size() == 1; }

bool is_tree(const SimpleGraph& g) {
  return is_connected(g) && static_cast<int>(g.edges().size()) == g.n() - 1;
}

namespace {

// max number of internally vertex-disjoint s-t paths, s and t non-adjacent
int disjoint_paths(const SimpleGraph& g, int s, int t) {
  int n = g.n();
  // node v_in = 2v, v_out = 2v+1
  int N = 2 * (n + 1);
  std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
  const int inf = n + 1;
  for (int v = 1; v <= n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? inf : 1;
  for (Edge e : g.edges()) {
    cap[2 * e.i + 1][2 * e.j] = inf;
    cap[2 * e.j + 1][2 * e.i] = inf;
  }
  int src = 2 * s + 1, dst = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> prev(N, -1);
    prev[src] = src;
    std::deque<int> q{src};
    while (!q.empty() && prev[dst] < 0) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < N; ++v)
        if (cap[u][v] > 0 && prev[v] < 0) {
          prev[v] = u;
          q.push_back(v);
        }
    }
    if (prev[dst] < 0) break;
    for (int v = dst; v != src; v = prev[v]) {
      --cap[prev[v]][v];
      ++cap[v][prev[v]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

Connectivity connectivity(const SimpleGraph& g) {
  int n = g.n();
  if (!is_connected(g)) return {false, 0};
  int k = n - 1;
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      if (!g.has_edge(s, t)) k = std::min(k, disjoint_paths(g, s, t));
  return {true, k};
}

BlockCutData block_cut(const SimpleGraph& g) {
  int n = g.n();
  if (n < 2) throw Error(ErrorKind::TooSmall, "block_cut needs n >= 2");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "block_cut");
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<bool> is_cut(n + 1, false);
  std::vector<Edge> stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = ++timer;
    int children = 0;
    for (int v : g.neighbors(u)) {
      if (v == parent) continue;
      if (!disc[v]) {
        ++children;
        stack.push_back({u, v});
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent != 0 || children > 1) is_cut[u] = true;
          std::set<int> b;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            b.insert(e.i);
            b.insert(e.j);
            if (e.i == u && e.j == v) break;
          }
          blocks.emplace_back(b.begin(), b.end());
        }
      } else if (disc[v] < disc[u]) {
        stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  dfs(1, 0);
  // the root is a cut vertex iff it has more than one DFS child; handled above
  BlockCutData bc;
  std::sort(blocks.begin(), blocks.end());
  bc.blocks = blocks;
  for (int v = 1; v <= n; ++v)
    if (is_cut[v]) bc.cut_vertices.push_back(v);
  bc.c_map.assign(n + 1, 0);
  for (int j : bc.cut_vertices) {
    std::vector<bool> removed(n + 1, false);
    removed[j] = true;
    bc.c_map[j] = static_cast<int>(components(g, removed).size()) - 1;
  }
  std::vector<int> cuts_in(blocks.size(), 0);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int v : blocks[b])
      if (is_cut[v]) {
        bc.tree_edges.push_back({v, b});
        ++cuts_in[b];
      }
  std::sort(bc.tree_edges.begin(), bc.tree_edges.end());
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    if (blocks.size() > 1 && cuts_in[b] == 1) {
      bc.leaf_blocks.push_back(b);
    } else {
      bc.internal_blocks.push_back(b);
      if (blocks[b].size() == 2) bc.internal_cut_edges.push_back({blocks[b][0], blocks[b][1]});
    }
  }
  std::sort(bc.internal_cut_edges.begin(), bc.internal_cut_edges.end());
  return bc;
}

std::vector<CutEdge> cut_edges(const SimpleGraph& g) {
  BlockCutData bc = block_cut(g);
  std::vector<CutEdge> out;
  for (const auto& b : bc.blocks) {
    if (b.size() != 2) continue;
    Edge s{b[0], b[1]};
    std::vector<Edge> rest;
    for (Edge e : g.edges())
      if (!(e == s)) rest.push_back(e);
    for (auto& c : components(SimpleGraph(g.n(), rest)))
      if (std::binary_search(c.begin(), c.end(), s.i)) out.push_back({s, c});
  }
  std::sort(out.begin(), out.end(), [](const CutEdge& x, const CutEdge& y) { return x.edge < y.edge; });
  return out;
}

bool is_cut_edge(const SimpleGraph& g, Edge s) {
  if (!g.has_edge(s.i, s.j)) return false;
  std::vector<Edge> rest;
  for (Edge e : g.edges())
    if (!(e == s)) rest.push_back(e);
  return components(SimpleGraph(g.n(), rest)).size() > components(g).size();
}

SimpleGraph cliqued_version(const SimpleGraph& g) {
  if (g.n() == 1) return g;
  BlockCutData bc = block_cut(g);
  std::set<Edge> es(g.edges().begin(), g.edges().end());
  for (const auto& b : bc.blocks)
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = x + 1; y < b.size(); ++y) es.insert({b[x], b[y]});
  return SimpleGraph(g.n(), std::vector<Edge>(es.begin(), es.end()));
}

bool is_cliqued(const SimpleGraph& g) { return cliqued_version(g) == g; }

namespace {

std::vector<int> bfs_dist(const SimpleGraph& g, int s) {
  std::vector<int> d(g.n() + 1, -1);
  std::deque<int> q{s};
  d[s] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbors(u))
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
  }
  return d;
}

// blocks adjacent to cut vertex v, split into leaf and internal
void blocks_at(const BlockCutData& bc, int v, std::vector<int>& leaf, std::vector<int>& internal) {
  for (auto [c, b] : bc.tree_edges) {
    if (c != v) continue;
    if (std::find(bc.leaf_blocks.begin(), bc.leaf_blocks.end(), b) != bc.leaf_blocks.end())
      leaf.push_back(b);
    else
      internal.push_back(b);
  }
}

}  // namespace

Permutation natural_labeling(const SimpleGraph& g) {
  int n = g.n();
  if (n < 3) throw Error(ErrorKind::TooSmall, "natural_labeling needs n >= 3");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "natural_labeling");
  BlockCutData bc = block_cut(g);
  if (bc.cut_vertices.empty() || is_naturally_labeled(g)) return Permutation::identity(n);

  int v = -1, B = -1;
  for (int c : bc.cut_vertices) {
    std::vector<int> leaf, internal;
    blocks_at(bc, c, leaf, internal);
    if (internal.size() > 1 || leaf.empty()) continue;
    v = c;
    for (int b : leaf)
      if (B < 0 || bc.blocks[b].size() > bc.blocks[B].size()) B = b;
    break;
  }
  const std::vector<int>& Bv = bc.blocks[B];
  int i = Bv[0] == v ? Bv[1] : Bv[0];
  std::vector<int> d = bfs_dist(g, i);
  auto by_dist = [&](int x, int y) { return std::pair(d[x], x) < std::pair(d[y], y); };

  std::vector<int> img(n + 1, 0);
  img[i] = n;
  std::vector<int> inner;
  for (int x : Bv)
    if (x != i && x != v) inner.push_back(x);
  std::sort(inner.begin(), inner.end(), by_dist);
  int next = n - 1;
  for (int x : inner) img[x] = next--;
  img[v] = next--;
  std::vector<int> outer;
  for (int x = 1; x <= n; ++x)
    if (!std::binary_search(Bv.begin(), Bv.end(), x)) outer.push_back(x);
  std::sort(outer.begin(), outer.end(), by_dist);
  for (int x : outer) img[x] = next--;
  return Permutation::from_images(std::vector<int>(img.begin() + 1, img.end()));
}

bool is_naturally_labeled(const SimpleGraph& g) {
  int n = g.n();
  if (n < 3 || !is_connected(g)) return false;
  BlockCutData bc = block_cut(g);
  if (bc.cut_vertices.empty()) return true;
  int B = -1;
  for (int b : bc.leaf_blocks)
    if (bc.blocks[b].back() == n) B = b;
  if (B < 0) return false;  // n must sit in a leaf block and not be a cut vertex
  const std::vector<int>& Bv = bc.blocks[B];
  int bsize = static_cast<int>(Bv.size());
  int v = -1;
  for (int x : Bv)
    if (bc.c_map[x] > 0) v = x;
  if (v != n - bsize + 1 || Bv.front() != n - bsize + 1) return false;
  std::vector<int> leaf, internal;
  blocks_at(bc, v, leaf, internal);
  if (internal.size() > 1) return false;
  for (int b : leaf)
    if (static_cast<int>(bc.blocks[b].size()) > bsize) return false;
  std::vector<int> d = bfs_dist(g, n);
  auto decreasing = [&](const std::vector<int>& s) {
    for (int x : s)
      for (int y : s)
        if (d[x] < d[y] && x < y) return false;
    return true;
  };
  std::vector<int> inner(Bv.begin() + 1, Bv.end());
  std::vector<int> outer;
  for (int x = 1; x < n - bsize + 1; ++x) outer.push_back(x);
  return decreasing(inner) && decreasing(outer);
}

DominantPairs dominant_pairs(const SimpleGraph& g) {
  if (!is_naturally_labeled(g)) throw Error(ErrorKind::NotNaturallyLabeled, "dominant_pairs");
  int n = g.n();
  BlockCutData bc = block_cut(g);
  DominantPairs dp;
  for (int j : bc.cut_vertices) {
    std::vector<bool> removed(n + 1, false);
    removed[j] = true;
    for (const auto& c : components(g, removed)) {
      if (c.back() == n) continue;
      Edge e{c.back(), j};
      if (is_cut_edge(g, e) && !(e == Edge{n - 1, n}))
        dp.strong.push_back(e);
      else
        dp.weak.push_back(e);
    }
  }
  std::sort(dp.strong.begin(), dp.strong.end());
  std::sort(dp.weak.begin(), dp.weak.end());
  return dp;
}

CutDecomposition cut_decomposition(const SimpleGraph& g, int j) {
  int n = g.n();
  if (j < 1 || j > n) throw Error(ErrorKind::BadIndex, "cut_decomposition");
  std::vector<bool> removed(n + 1, false);
  removed[j] = true;
  auto comps = components(g, removed);
  if (comps.size() < 2) throw Error(ErrorKind::NotCutVertex, std::to_string(j) + " is not a cut vertex");
  CutDecomposition cd{j, {}};
  for (auto& c : comps) cd.components[c.back() == n ? 0 : c.back()] = c;
  return cd;
}

GraphType graph_type(const SimpleGraph& g) {
  int n = g.n();
  if (n < 3) throw Error(ErrorKind::TooSmall, "graph_type needs n >= 3");
  if (!is_cliqued(g)) throw Error(ErrorKind::NotCliqued, "graph_type");
  if (!is_naturally_labeled(g)) throw Error(ErrorKind::NotNaturallyLabeled, "graph_type");
  if (is_cut_edge(g, {n - 1, n})) return GraphType::A;
  BlockCutData bc = block_cut(g);
  bool cut = std::binary_search(bc.cut_vertices.begin(), bc.cut_vertices.end(), n - 2);
  std::vector<int> top{n - 2, n - 1, n};
  if (cut && std::find(bc.blocks.begin(), bc.blocks.end(), top) != bc.blocks.end()) return GraphType::B;
  return GraphType::C;
}

char graph_type_name(GraphType t) { return t == GraphType::A ? 'A' : t == GraphType::B ? 'B' : 'C'; }

}  // namespace splinelab
