#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "splinelab/error.hpp"
#include "splinelab/generate.hpp"

using namespace th;

namespace {

// all bijections of [n] whose relabeling is naturally labeled
std::vector<Permutation> natural_bijections(const SimpleGraph& g) {
  std::vector<Permutation> out;
  for (const auto& phi : symmetric_group(g.n()).elements())
    if (is_naturally_labeled(g.relabeled(phi))) out.push_back(phi);
  return out;
}

std::vector<int> bfs(const SimpleGraph& g, int s) {
  std::vector<int> d(g.n() + 1, -1);
  std::vector<int> q{s};
  d[s] = 0;
  for (std::size_t k = 0; k < q.size(); ++k)
    for (int u : g.neighbors(q[k]))
      if (d[u] < 0) {
        d[u] = d[q[k]] + 1;
        q.push_back(u);
      }
  return d;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("input validation") {
    CHECK_THROWS_AS(G(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(G(3, {{1, 2}, {2, 1}}), Error);
    CHECK_THROWS_AS(G(3, {{1, 4}}), Error);
    CHECK(G(3, {{2, 1}}).edges() == std::vector<Edge>{{1, 2}});
  }

  TEST_CASE("connectivity examples") {
    auto k4 = connectivity(SimpleGraph::complete(4));
    CHECK(k4.connected);
    CHECK(k4.k == 3);
    CHECK(connectivity(SimpleGraph::path(3)).k == 1);
    CHECK(connectivity(cycle4()).k == 2);
    CHECK_FALSE(connectivity(G(4, {{1, 2}, {3, 4}})).connected);
  }

  TEST_CASE("connectivity agrees with exhaustive vertex removal") {
    for (int n = 2; n <= 5; ++n)
      for (const auto& g : all_connected_graphs(n)) CHECK(connectivity(g).k == oracle::vertex_connectivity(n, raw(g)));
    std::mt19937_64 rng(11);
    for (int k = 0; k < 40; ++k) {
      auto g = random_connected_graph(6 + k % 2, rng);
      CHECK(connectivity(g).k == oracle::vertex_connectivity(g.n(), raw(g)));
    }
  }

  TEST_CASE("block-cut tree of the three-cycle example") {
    auto bc = block_cut(block_cut_example());
    CHECK(bc.cut_vertices == std::vector<int>{4, 5, 9});
    CHECK(as_set(bc.blocks) == std::set<std::vector<int>>{{9, 10, 11, 12}, {4, 9}, {1, 2, 3, 4}, {4, 5}, {5, 6, 7, 8}});
  }

  TEST_CASE("leaf and internal blocks of the dimension example") {
    auto bc = block_cut(dim_blockcut_example());
    std::set<std::vector<int>> leaf, internal;
    for (int b : bc.leaf_blocks) leaf.insert(bc.blocks[b]);
    for (int b : bc.internal_blocks) internal.insert(bc.blocks[b]);
    CHECK(leaf == std::set<std::vector<int>>{{4, 7}, {4, 6, 11}, {1, 9, 10}, {2, 3}, {2, 5, 8}});
    CHECK(internal == std::set<std::vector<int>>{{1, 4, 12}, {1, 2}});
    CHECK(bc.internal_cut_edges == std::vector<Edge>{{1, 2}});
    CHECK(bc.c_map[1] == 2);
    CHECK(bc.c_map[2] == 2);
    CHECK(bc.c_map[4] == 2);
  }

  TEST_CASE("complete graphs form one internal block") {
    for (int n = 3; n <= 6; ++n) {
      auto bc = block_cut(SimpleGraph::complete(n));
      CHECK(bc.cut_vertices.empty());
      CHECK(bc.blocks.size() == 1);
      CHECK(bc.leaf_blocks.empty());
      CHECK(bc.internal_blocks == std::vector<int>{0});
      CHECK(bc.internal_cut_edges.empty());
    }
  }

  TEST_CASE("block-cut invariants") {
    std::mt19937_64 rng(5);
    std::vector<SimpleGraph> gs = all_connected_graphs(5);
    for (int k = 0; k < 30; ++k) gs.push_back(random_tree(7, rng));
    for (const auto& g : gs) {
      auto bc = block_cut(g);
      int n = g.n();
      for (std::size_t a = 0; a < bc.blocks.size(); ++a)
        for (std::size_t b = a + 1; b < bc.blocks.size(); ++b) {
          std::vector<int> common;
          std::set_intersection(bc.blocks[a].begin(), bc.blocks[a].end(), bc.blocks[b].begin(), bc.blocks[b].end(),
                                std::back_inserter(common));
          CHECK(common.size() <= 1);
          for (int v : common) CHECK(bc.c_map[v] > 0);
        }
      // tree: vertices = cuts + blocks, edges = that minus one
      CHECK(bc.tree_edges.size() == bc.cut_vertices.size() + bc.blocks.size() - 1);
      for (int v = 1; v <= n; ++v) {
        std::vector<bool> gone(n + 1, false);
        gone[v] = true;
        CHECK(bc.c_map[v] + 1 == oracle::count_components(n, raw(g), gone));
      }
      CHECK((connectivity(g).k >= 2) == bc.cut_vertices.empty());
    }
  }

  TEST_CASE("block statistics survive relabeling") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 60; ++k) {
      auto g = random_connected_graph(3 + k % 5, rng);
      auto h = g.relabeled(random_permutation(g.n(), rng));
      auto stats = [](const SimpleGraph& x) {
        auto bc = block_cut(x);
        std::multiset<std::size_t> sizes;
        for (auto& b : bc.blocks) sizes.insert(b.size());
        int big = 0, sum_c = 0;
        for (int b : bc.internal_blocks) big += bc.blocks[b].size() > 2;
        for (int c : bc.c_map) sum_c += c;
        std::multiset<std::size_t> ic;
        auto ces = cut_edges(x);
        for (Edge s : bc.internal_cut_edges)
          for (auto& ce : ces)
            if (ce.edge == s) ic.insert(std::min(ce.side.size(), x.n() - ce.side.size()));
        return std::tuple(sizes, bc.leaf_blocks.size(), big, ic, sum_c);
      };
      CHECK(stats(g) == stats(h));
    }
  }

  TEST_CASE("cut edges") {
    auto p3 = cut_edges(SimpleGraph::path(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].edge == Edge{1, 2});
    CHECK(p3[1].edge == Edge{2, 3});
    CHECK(cut_edges(cycle4()).empty());
    auto star = cut_edges(SimpleGraph::star(4));
    REQUIRE(star.size() == 3);
    CHECK(star[0].side == std::vector<int>{1});
    CHECK(star[2].edge == Edge{3, 4});
    CHECK(star[2].side == std::vector<int>{3});
  }

  TEST_CASE("cliqued version") {
    CHECK(cliqued_version(cycle4()) == SimpleGraph::complete(4));
    CHECK(cliqued_version(SimpleGraph::path(3)) == SimpleGraph::path(3));
    auto c = cliqued_version(block_cut_example());
    auto want = block_cut_example();
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {5, 7}, {6, 8}, {9, 11}, {10, 12}})
      want = want.with_edge(a, b);
    CHECK(c == want);
    for (const auto& g : all_connected_graphs(5)) {
      auto cg = cliqued_version(g);
      CHECK(cliqued_version(cg) == cg);
      CHECK(block_cut(cg).cut_vertices == block_cut(g).cut_vertices);
      CHECK(block_cut(cg).blocks == block_cut(g).blocks);
      std::vector<Edge> a, b;
      for (auto& x : cut_edges(g)) a.push_back(x.edge);
      for (auto& x : cut_edges(cg)) b.push_back(x.edge);
      CHECK(a == b);
    }
  }

  TEST_CASE("natural labeling examples") {
    CHECK(natural_labeling(SimpleGraph::path(3)).is_identity());
    CHECK(is_naturally_labeled(SimpleGraph::path(3)));
    CHECK(natural_labeling(SimpleGraph::complete(5)).is_identity());

    auto star = SimpleGraph::star(4);
    auto phi = natural_labeling(star);
    CHECK(phi(4) == 3);
    CHECK(phi(1) == 4);
    CHECK(star.relabeled(phi) == G(4, {{1, 3}, {2, 3}, {3, 4}}));
    // every valid relabeling moves the center to 3 and some leaf to 4
    auto valid = natural_bijections(star);
    CHECK(!valid.empty());
    for (const auto& w : valid) {
      CHECK(w(4) == 3);
      CHECK(w.inverse()(4) != 4);
    }
    CHECK(std::find(valid.begin(), valid.end(), phi) != valid.end());
    CHECK_THROWS_AS(natural_labeling(SimpleGraph::path(2)), Error);
  }

  TEST_CASE("the worked twelve-vertex example") {
    auto g = dim_blockcut_example();
    auto h = g.relabeled(natural_labeling(g));
    CHECK(is_naturally_labeled(h));
    // the choice made in the text: 8 -> 12, 5 -> 11, cut vertex 2 -> 10, the rest by distance from 8
    auto d = bfs(g, 8);
    std::vector<int> rest;
    for (int v = 1; v <= 12; ++v)
      if (v != 8 && v != 5 && v != 2) rest.push_back(v);
    std::sort(rest.begin(), rest.end(), [&](int a, int b) { return std::pair(d[a], a) < std::pair(d[b], b); });
    std::vector<int> img(12);
    img[7] = 12;
    img[4] = 11;
    img[1] = 10;
    int next = 9;
    for (int v : rest) img[v - 1] = next--;
    auto phi = Permutation::from_images(img);
    CHECK(is_naturally_labeled(g.relabeled(phi)));
    // one full choice of labels, which produces the naturally labeled twelve-vertex graph
    auto full = Permutation::from_images({8, 10, 9, 4, 11, 3, 1, 12, 6, 7, 2, 5});
    CHECK(g.relabeled(full) == linear_example_11());
    CHECK(is_naturally_labeled(linear_example_11()));
    // sending 4 rather than the cut vertex 2 to 10 breaks the conditions
    auto swapped = Permutation::from_images({8, 4, 9, 10, 11, 3, 1, 12, 6, 7, 2, 5});
    CHECK_FALSE(is_naturally_labeled(g.relabeled(swapped)));
  }

  TEST_CASE("natural labeling properties on small graphs") {
    std::mt19937_64 rng(21);
    std::vector<SimpleGraph> gs = all_connected_graphs(5);
    for (int k = 0; k < 40; ++k) gs.push_back(random_connected_graph(7, rng));
    for (const auto& g : gs) {
      auto h = g.relabeled(natural_labeling(g));
      int n = h.n();
      REQUIRE(is_naturally_labeled(h));
      auto bc = block_cut(h);
      for (int j : bc.cut_vertices) {
        std::vector<bool> gone(n + 1, false);
        gone[j] = true;
        for (auto& c : components(h, gone))
          if (c.back() != n)
            for (int k : c) CHECK(k < j);
      }
      auto dp = dominant_pairs(h);
      int sum_c = 0;
      for (int c : bc.c_map) sum_c += c;
      CHECK(static_cast<int>(dp.strong.size() + dp.weak.size()) == sum_c);
      std::set<int> lower;
      for (auto& list : {dp.strong, dp.weak})
        for (Edge e : list) {
          CHECK(h.has_edge(e.i, e.j));
          CHECK(lower.insert(e.i).second);
        }
    }
  }

  TEST_CASE("every natural bijection is found by the checker on small graphs") {
    for (const auto& g : all_connected_graphs(4)) {
      if (block_cut(g).cut_vertices.empty()) continue;
      auto valid = natural_bijections(g);
      CHECK(std::find(valid.begin(), valid.end(), natural_labeling(g)) != valid.end());
    }
  }

  TEST_CASE("dominant pairs") {
    auto dp = dominant_pairs(linear_example_11());
    CHECK(dp.strong == std::vector<Edge>{{1, 4}, {8, 10}, {9, 10}});
    CHECK(dp.weak == std::vector<Edge>{{3, 4}, {5, 8}, {7, 8}});
    auto k5 = dominant_pairs(SimpleGraph::complete(5));
    CHECK(k5.strong.empty());
    CHECK(k5.weak.empty());
    auto p3 = dominant_pairs(SimpleGraph::path(3));
    CHECK(p3.strong == std::vector<Edge>{{1, 2}});
    CHECK(p3.weak.empty());
    CHECK_THROWS_AS(dominant_pairs(SimpleGraph::star(4)), Error);
  }

  TEST_CASE("cut decomposition") {
    auto cd = cut_decomposition(linear_example_11(), 8);
    CHECK(cd.components.at(5) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(cd.components.at(7) == std::vector<int>{6, 7});
    CHECK(cd.components.at(0) == std::vector<int>{9, 10, 11, 12});
    CHECK(cd.components.size() == 3);
    auto p3 = cut_decomposition(SimpleGraph::path(3), 2);
    CHECK(p3.components.at(1) == std::vector<int>{1});
    CHECK(p3.components.at(0) == std::vector<int>{3});
    auto st = cut_decomposition(G(4, {{1, 3}, {2, 3}, {3, 4}}), 3);
    CHECK(st.components.at(1) == std::vector<int>{1});
    CHECK(st.components.at(2) == std::vector<int>{2});
    CHECK(st.components.at(0) == std::vector<int>{4});
    CHECK_THROWS_AS(cut_decomposition(SimpleGraph::path(3), 1), Error);
  }

  TEST_CASE("graph types") {
    CHECK(graph_type(linear_example_11()) == GraphType::B);
    CHECK(graph_type(type_a_example()) == GraphType::A);
    CHECK(graph_type(type_b_relabel_example()) == GraphType::B);
    CHECK(graph_type(SimpleGraph::complete(5)) == GraphType::C);
    CHECK_THROWS_AS(graph_type(cycle4()), Error);
  }
}
