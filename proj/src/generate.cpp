#include "splinelab/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "splinelab/error.hpp"

namespace splinelab {

std::vector<SimpleGraph> all_connected_graphs(int n) {
  if (n > 6) throw Error(ErrorKind::TooLarge, "exhaustive enumeration needs n <= 6");
  std::vector<Edge> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  std::vector<SimpleGraph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) es.push_back(pairs[k]);
    SimpleGraph g(n, es);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

SimpleGraph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorKind::TooSmall, "random_tree");
  if (n == 1) return SimpleGraph(1, std::vector<Edge>{});
  if (n == 2) return SimpleGraph(2, std::vector<Edge>{{1, 2}});
  // random Pruefer sequence
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  std::vector<int> degree(n + 1, 1);
  for (int x : seq) ++degree[x];
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> es;
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.push_back(make_edge(leaf, x));
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  es.push_back(make_edge(a, b));
  return SimpleGraph(n, es);
}

SimpleGraph random_connected_graph(int n, std::mt19937_64& rng) {
  SimpleGraph t = random_tree(n, rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> es = t.edges();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!t.has_edge(i, j) && coin(rng)) es.push_back({i, j});
  return SimpleGraph(n, es);
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  for (int k = n - 1; k > 0; --k) {
    std::uniform_int_distribution<int> pick(0, k);
    std::swap(im[k], im[pick(rng)]);
  }
  return Permutation::from_images(im);
}

}  // namespace splinelab
