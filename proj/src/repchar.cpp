#include "splinelab/repchar.hpp"

#include <algorithm>
#include <numeric>

#include "splinelab/error.hpp"

namespace splinelab {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

void check_input(const SimpleGraph& g) {
  if (g.n() < 3) throw Error(ErrorKind::TooSmall, "formula needs n >= 3");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "formula");
}

struct LabelFreeStats {
  int sum_c = 0;
  int leaf_plus_big_internal = 0;
  std::vector<int> ic_sides;  // |G_s| for each internal cut edge
};

LabelFreeStats label_free_stats(const SimpleGraph& g) {
  BlockCutData bc = block_cut(g);
  LabelFreeStats st;
  st.sum_c = std::accumulate(bc.c_map.begin(), bc.c_map.end(), 0);
  st.leaf_plus_big_internal = static_cast<int>(bc.leaf_blocks.size());
  for (int b : bc.internal_blocks)
    if (bc.blocks[b].size() > 2) ++st.leaf_plus_big_internal;
  auto ces = cut_edges(g);
  for (Edge s : bc.internal_cut_edges)
    for (const auto& ce : ces)
      if (ce.edge == s) st.ic_sides.push_back(static_cast<int>(ce.side.size()));
  return st;
}

struct NaturalStats {
  int sum_c = 0;
  std::vector<int> strong_sides;  // |Gamma_i^j|
  int weak = 0;
};

NaturalStats natural_stats(const SimpleGraph& g) {
  SimpleGraph h = g.relabeled(natural_labeling(g));
  DominantPairs dp = dominant_pairs(h);
  NaturalStats st;
  BlockCutData bc = block_cut(h);
  st.sum_c = std::accumulate(bc.c_map.begin(), bc.c_map.end(), 0);
  for (Edge s : dp.strong)
    st.strong_sides.push_back(static_cast<int>(cut_decomposition(h, s.j).components.at(s.i).size()));
  st.weak = static_cast<int>(dp.weak.size());
  return st;
}

Partition two_row(int n, int m) {
  int a = std::max(n - m, m), b = std::min(n - m, m);
  return b > 0 ? Partition{a, b} : Partition{a};
}

Integer recursive_D(const SimpleGraph& g0) {
  int n = g0.n();
  SimpleGraph c = cliqued_version(g0);
  if (n == 3) {
    if (c.edges().size() == 3) return 5;
    return 7;
  }
  SimpleGraph g = c.relabeled(natural_labeling(c));
  g = cliqued_version(g);
  DominantPairs dp = dominant_pairs(g);
  Integer d = 1 + recursive_D(g.without_last_vertex());
  d += graph_type(g) == GraphType::A ? n - 1 : 1;
  for (Edge s : dp.strong)
    d += binomial(n - 1, static_cast<int>(cut_decomposition(g, s.j).components.at(s.i).size()) - 1);
  d += static_cast<long>(dp.weak.size());
  return d;
}

}  // namespace

Integer formula_D(const SimpleGraph& g, FormulaVariant v) {
  check_input(g);
  int n = g.n();
  if (v == FormulaVariant::LabelFree) {
    LabelFreeStats st = label_free_stats(g);
    Integer d = 2 * n - 1 - st.sum_c + n * (st.leaf_plus_big_internal - 1);
    for (int m : st.ic_sides) d += binomial(n, m);
    return d;
  }
  if (v == FormulaVariant::NaturalLabel) {
    NaturalStats st = natural_stats(g);
    Integer d = 2 * n - 1 + n * st.weak - st.sum_c;
    for (int m : st.strong_sides) d += binomial(n, m);
    return d;
  }
  return recursive_D(g);
}

SymFunc formula_L1(const SimpleGraph& g, FormulaVariant v) {
  check_input(g);
  int n = g.n();
  using B = SymFunc::Basis;
  SymFunc f = SymFunc::zero(B::H, n);
  if (v == FormulaVariant::NaturalLabel) {
    NaturalStats st = natural_stats(g);
    for (int m : st.strong_sides) f.add(two_row(n, m), 1);
    f.add({n - 1, 1}, st.weak);
    f.add({n}, n - 1 - st.sum_c);
    return f;
  }
  if (v != FormulaVariant::LabelFree) throw Error(ErrorKind::MalformedInput, "no recursive character formula");
  LabelFreeStats st = label_free_stats(g);
  for (int m : st.ic_sides) f.add(two_row(n, m), 1);
  f.add({n - 1, 1}, st.leaf_plus_big_internal - 1);
  f.add({n}, n - 1 - st.sum_c);
  return f;
}

SymFunc formula_R1(const SimpleGraph& g, FormulaVariant v) {
  check_input(g);
  int n = g.n();
  using B = SymFunc::Basis;
  SymFunc f = SymFunc::zero(B::S, n);
  auto add_edge_term = [&](int m) {
    f += h_to_s(SymFunc::single(B::H, two_row(n, m)));
    f.add({n}, -1);
  };
  if (v == FormulaVariant::NaturalLabel) {
    NaturalStats st = natural_stats(g);
    for (int m : st.strong_sides) add_edge_term(m);
    f.add({n - 1, 1}, 1 + st.weak);
    return f;
  }
  if (v != FormulaVariant::LabelFree) throw Error(ErrorKind::MalformedInput, "no recursive character formula");
  LabelFreeStats st = label_free_stats(g);
  for (int m : st.ic_sides) add_edge_term(m);
  f.add({n - 1, 1}, st.leaf_plus_big_internal);
  return f;
}

ClassFunction quotient_character(const SimpleGraph& g, Side side, int d, const OracleOptions& opt) {
  int n = g.n();
  if (d < 0) throw Error(ErrorKind::BadIndex, "negative degree");
  SplineSpaceBasis V = splines_basis(g, d, opt);
  const SymmetricGroup& G = symmetric_group(n);
  std::size_t M = V.mons.size();
  std::size_t dimV = V.dimension();

  EchelonBasis ideal(dimV);
  if (d >= 1) {
    SplineSpaceBasis U = splines_basis(g, d - 1, opt);
    for (const Spline& gamma : U.splines())
      for (int i = 1; i <= n; ++i) {
        Spline prod = module_action(side, Poly::variable(n, i), gamma);
        auto c = V.coordinates(spline_to_vector(prod, V.mons));
        ideal.add(sparse_from_dense(c));
      }
  }

  // coefficient of basis vector j read at the preimage of `idx` under w
  auto pre_index = [&](const Permutation& winv, std::size_t idx) {
    std::size_t r = idx / M;
    const Monomial& m = V.mons[idx % M];
    return G.rank(winv * G[r]) * M + V.mons.index(act_monomial(winv, m));
  };

  auto classes = conjugacy_classes(n, 8);
  auto traces = map_indexed<Rational>(
      classes.size(),
      [&](std::size_t c) {
        Permutation winv = classes[c].representative.inverse();
        Rational tr = 0;
        for (std::size_t k = 0; k < dimV; ++k) tr += sparse_at(V.vectors[k], pre_index(winv, V.readout[k]));
        for (std::size_t k = 0; k < ideal.rank(); ++k) {
          std::size_t pre = pre_index(winv, V.readout[ideal.pivots()[k]]);
          for (const auto& [j, x] : ideal.rows()[k]) tr -= x * sparse_at(V.vectors[j], pre);
        }
        return tr;
      },
      opt.exec);
  ClassFunction chi;
  for (std::size_t c = 0; c < classes.size(); ++c) chi[classes[c].cycle_type] = traces[c];
  return chi;
}

bool triviality_check(const SimpleGraph& g, int k, const OracleOptions& opt) {
  int n = g.n();
  for (int d = 1; d < k && d <= 2; ++d) {
    SymFunc s = decompose(quotient_character(g, Side::Left, d, opt), n);
    for (const auto& [p, c] : s.coeffs)
      if (p != Partition{n}) return false;
  }
  return true;
}

}  // namespace splinelab
