#include "splinelab/spline.hpp"

#include <algorithm>
#include <set>

#include "splinelab/error.hpp"

namespace splinelab {

Spline::Spline(SimpleGraph g, std::vector<Poly> values) : graph_(std::move(g)), values_(std::move(values)) {
  if (values_.size() != symmetric_group(graph_.n()).size())
    throw Error(ErrorKind::SizeMismatch, "spline needs one value per permutation");
  for (const Poly& p : values_)
    if (p.n() != graph_.n()) throw Error(ErrorKind::SizeMismatch, "spline value has wrong variable count");
}

Spline Spline::zero(const SimpleGraph& g) {
  return Spline(g, std::vector<Poly>(symmetric_group(g.n()).size(), Poly(g.n())));
}

const Poly& Spline::at(const Permutation& w) const { return values_[symmetric_group(n()).rank(w)]; }

bool Spline::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::vector<Permutation> Spline::support() const {
  std::vector<Permutation> out;
  const SymmetricGroup& G = symmetric_group(n());
  for (std::size_t r = 0; r < values_.size(); ++r)
    if (!values_[r].is_zero()) out.push_back(G[r]);
  return out;
}

int Spline::degree() const {
  int d = -1;
  for (const Poly& p : values_) d = std::max(d, p.degree());
  return d;
}

bool Spline::is_homogeneous() const {
  int d = degree();
  for (const Poly& p : values_)
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != d)) return false;
  return true;
}

std::vector<std::string> Spline::render() const {
  std::vector<std::string> out;
  const SymmetricGroup& G = symmetric_group(n());
  for (std::size_t r = 0; r < values_.size(); ++r)
    if (!values_[r].is_zero()) out.push_back(G[r].one_line() + ": " + values_[r].to_string());
  return out;
}

Spline& Spline::operator+=(const Spline& o) {
  if (!(graph_ == o.graph_)) throw Error(ErrorKind::GraphMismatch, "spline add");
  for (std::size_t r = 0; r < values_.size(); ++r) values_[r] += o.values_[r];
  return *this;
}

Spline& Spline::operator-=(const Spline& o) {
  if (!(graph_ == o.graph_)) throw Error(ErrorKind::GraphMismatch, "spline sub");
  for (std::size_t r = 0; r < values_.size(); ++r) values_[r] -= o.values_[r];
  return *this;
}

Spline& Spline::operator*=(const Rational& c) {
  for (Poly& p : values_) p *= c;
  return *this;
}

Spline operator*(const Spline& a, const Spline& b) {
  if (!(a.graph_ == b.graph_)) throw Error(ErrorKind::GraphMismatch, "spline mul");
  std::vector<Poly> v;
  v.reserve(a.values_.size());
  for (std::size_t r = 0; r < a.values_.size(); ++r) v.push_back(a.values_[r] * b.values_[r]);
  return Spline(a.graph_, std::move(v));
}

bool is_spline(const Spline& rho, const LabeledCayleyGraph& cg) {
  for (const CayleyEdge& e : cg.edges)
    if (!(rho.at_rank(e.w) - rho.at_rank(e.v)).in_linear_ideal(e.a, e.b)) return false;
  return true;
}

bool is_spline(const Spline& rho) { return is_spline(rho, cayley_graph(rho.graph(), 8)); }

Spline dot_action(const Permutation& w, const Spline& rho) {
  if (w.n() != rho.n()) throw Error(ErrorKind::SizeMismatch, "dot_action");
  const SymmetricGroup& G = symmetric_group(rho.n());
  Permutation winv = w.inverse();
  std::vector<Poly> v(G.size());
  for (std::size_t r = 0; r < G.size(); ++r) v[r] = rho.at_rank(G.rank(winv * G[r])).act(w);
  return Spline(rho.graph(), std::move(v));
}

Spline module_action(Side side, const Poly& f, const Spline& rho) {
  if (f.n() != rho.n()) throw Error(ErrorKind::SizeMismatch, "module_action");
  const SymmetricGroup& G = symmetric_group(rho.n());
  std::vector<Poly> v(G.size());
  for (std::size_t r = 0; r < G.size(); ++r) {
    if (rho.at_rank(r).is_zero()) {
      v[r] = Poly(rho.n());
      continue;
    }
    v[r] = (side == Side::Left ? f : f.act(G[r])) * rho.at_rank(r);
  }
  return Spline(rho.graph(), std::move(v));
}

Spline relabel(const Permutation& omega, const Spline& rho) {
  if (omega.n() != rho.n()) throw Error(ErrorKind::SizeMismatch, "relabel");
  const SymmetricGroup& G = symmetric_group(rho.n());
  Permutation oinv = omega.inverse();
  std::vector<Poly> v(G.size());
  for (std::size_t r = 0; r < G.size(); ++r) v[r] = rho.at_rank(G.rank(oinv * G[r] * omega)).act(omega);
  return Spline(rho.graph().relabeled(omega), std::move(v));
}

Spline constant_one(const SimpleGraph& g) {
  return Spline(g, std::vector<Poly>(symmetric_group(g.n()).size(), Poly::constant(g.n(), 1)));
}

Spline t_bar(const SimpleGraph& g, int i) {
  return Spline(g, std::vector<Poly>(symmetric_group(g.n()).size(), Poly::variable(g.n(), i)));
}

Spline x_bar(const SimpleGraph& g, int i) {
  if (i < 1 || i > g.n()) throw Error(ErrorKind::BadIndex, "x_bar");
  const SymmetricGroup& G = symmetric_group(g.n());
  std::vector<Poly> v;
  for (const Permutation& w : G.elements()) v.push_back(Poly::variable(g.n(), w(i)));
  return Spline(g, std::move(v));
}

Spline coset_spline(const SimpleGraph& tree, const Permutation& w, const std::vector<Edge>& B) {
  if (!is_tree(tree)) throw Error(ErrorKind::NotATree, "coset_spline");
  int n = tree.n();
  std::vector<Edge> rest;
  for (Edge e : tree.edges())
    if (std::find(B.begin(), B.end(), e) == B.end()) rest.push_back(e);
  for (Edge e : B)
    if (!tree.has_edge(e.i, e.j)) throw Error(ErrorKind::BadIndex, "B must be a subset of E");
  const SymmetricGroup& G = symmetric_group(n);
  std::vector<Poly> v(G.size(), Poly(n));
  for (const Permutation& u : coset_members(Permutation::identity(n), B)) {
    Poly p = Poly::constant(n, 1);
    for (Edge e : rest) p = p * Poly::linear(n, u(e.i), u(e.j));
    v[G.rank(u)] = p;
  }
  return dot_action(w, Spline(tree, std::move(v)));
}

Spline cut_edge_spline(const SimpleGraph& g, Edge s, const std::vector<int>& A, int inner) {
  int n = g.n();
  if (!is_cut_edge(g, s)) throw Error(ErrorKind::NotCutEdge, edge_string(s));
  if (inner != s.i && inner != s.j) throw Error(ErrorKind::BadIndex, "inner endpoint");
  int outer = inner == s.i ? s.j : s.i;
  std::vector<Edge> rest;
  for (Edge e : g.edges())
    if (!(e == s)) rest.push_back(e);
  std::vector<int> side;
  for (auto& c : components(SimpleGraph(n, rest)))
    if (std::binary_search(c.begin(), c.end(), inner)) side = c;
  std::vector<int> a = A;
  std::sort(a.begin(), a.end());
  if (a.size() != side.size() || std::adjacent_find(a.begin(), a.end()) != a.end() ||
      (!a.empty() && (a.front() < 1 || a.back() > n)))
    throw Error(ErrorKind::BadSubsetSize, "|A| must equal |G_s|");
  const SymmetricGroup& G = symmetric_group(n);
  std::vector<Poly> v(G.size(), Poly(n));
  for (std::size_t r = 0; r < G.size(); ++r) {
    const Permutation& w = G[r];
    bool in = true;
    for (int x : side) in = in && std::binary_search(a.begin(), a.end(), w(x));
    if (in) v[r] = Poly::linear(n, w(inner), w(outer));
  }
  return Spline(g, std::move(v));
}

Spline cut_vertex_spline(const SimpleGraph& g, int j, const std::vector<int>& Gc, int k) {
  int n = g.n();
  if (j < 1 || j > n || k < 1 || k > n) throw Error(ErrorKind::BadIndex, "cut_vertex_spline");
  std::vector<bool> removed(n + 1, false);
  removed[j] = true;
  auto comps = components(g, removed);
  if (comps.size() < 2) throw Error(ErrorKind::NotCutVertex, std::to_string(j));
  std::vector<int> c = Gc;
  std::sort(c.begin(), c.end());
  if (std::find(comps.begin(), comps.end(), c) == comps.end())
    throw Error(ErrorKind::BadComponent, set_string(Gc) + " is not a component of the graph minus " + std::to_string(j));
  const SymmetricGroup& G = symmetric_group(n);
  std::vector<Poly> v(G.size(), Poly(n));
  for (std::size_t r = 0; r < G.size(); ++r) {
    const Permutation& w = G[r];
    int pre = w.inverse()(k);
    if (std::binary_search(c.begin(), c.end(), pre)) v[r] = Poly::linear(n, k, w(j));
  }
  return Spline(g, std::move(v));
}

const Spline* SplineFamily::find(const std::string& tag) const {
  for (const auto& m : members)
    if (m.tag == tag) return &m.spline;
  return nullptr;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

std::string edge_string(Edge e) { return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")"; }

namespace {

std::string f_tag(const std::vector<int>& A, Edge s) { return "f_" + set_string(A) + "^" + edge_string(s); }

std::string y_tag(const std::vector<int>& G, int k, int j) {
  return "y_{" + set_string(G) + "," + std::to_string(k) + "}^" + std::to_string(j);
}

void add_tx(SplineFamily& fam, const SimpleGraph& g) {
  for (int i = 1; i <= g.n(); ++i) fam.members.push_back({"t_" + std::to_string(i), t_bar(g, i)});
  for (int i = 1; i <= g.n(); ++i) fam.members.push_back({"x_" + std::to_string(i), x_bar(g, i)});
}

}  // namespace

SplineFamily family(FamilyKind kind, const SimpleGraph& g) {
  int n = g.n();
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "family");
  SplineFamily fam;
  if (kind == FamilyKind::F) {
    add_tx(fam, g);
    if (n < 2) return fam;
    for (const CutEdge& ce : cut_edges(g))
      for (const auto& A : subsets_of_size(n, static_cast<int>(ce.side.size())))
        fam.members.push_back({f_tag(A, ce.edge), cut_edge_spline(g, ce.edge, A)});
    for (int j : block_cut(g).cut_vertices) {
      std::vector<bool> removed(n + 1, false);
      removed[j] = true;
      for (const auto& c : components(g, removed))
        for (int k = 1; k <= n; ++k) fam.members.push_back({y_tag(c, k, j), cut_vertex_spline(g, j, c, k)});
    }
    return fam;
  }

  if (!is_naturally_labeled(g)) throw Error(ErrorKind::NotNaturallyLabeled, "family");
  DominantPairs dp = dominant_pairs(g);
  auto side_of = [&](Edge e) { return cut_decomposition(g, e.j).components.at(e.i); };

  if (kind == FamilyKind::B) add_tx(fam, g);
  if (kind == FamilyKind::LS) {
    std::set<int> lower;
    for (Edge e : dp.strong) lower.insert(e.i);
    for (Edge e : dp.weak) lower.insert(e.i);
    for (int r = 1; r < n; ++r)
      if (!lower.count(r)) fam.members.push_back({"x_" + std::to_string(r), x_bar(g, r)});
  }
  if (kind == FamilyKind::RS)
    for (int r = 1; r < n; ++r)
      fam.members.push_back({"t_" + std::to_string(r) + "-t_" + std::to_string(r + 1), t_bar(g, r) - t_bar(g, r + 1)});

  for (Edge s : dp.strong) {
    auto subsets = subsets_of_size(n, static_cast<int>(side_of(s).size()));
    if (kind == FamilyKind::RS) {
      for (std::size_t p = 0; p + 1 < subsets.size(); ++p)
        fam.members.push_back({f_tag(subsets[p], s) + "-" + f_tag(subsets[p + 1], s),
                               cut_edge_spline(g, s, subsets[p]) - cut_edge_spline(g, s, subsets[p + 1])});
    } else {
      for (const auto& A : subsets) fam.members.push_back({f_tag(A, s), cut_edge_spline(g, s, A)});
    }
  }
  for (Edge e : dp.weak) {
    auto c = side_of(e);
    if (kind == FamilyKind::RS) {
      for (int k = 1; k < n; ++k)
        fam.members.push_back({y_tag(c, k, e.j) + "-" + y_tag(c, k + 1, e.j),
                               cut_vertex_spline(g, e.j, c, k) - cut_vertex_spline(g, e.j, c, k + 1)});
    } else {
      for (int k = 1; k <= n; ++k) fam.members.push_back({y_tag(c, k, e.j), cut_vertex_spline(g, e.j, c, k)});
    }
  }
  return fam;
}

SplineFamily coset_spline_family(const SimpleGraph& tree) {
  if (!is_tree(tree)) throw Error(ErrorKind::NotATree, "coset_spline_family");
  int n = tree.n();
  const auto& E = tree.edges();
  const SymmetricGroup& G = symmetric_group(n);
  SplineFamily fam;
  for (std::size_t mask = 0; mask < (std::size_t{1} << E.size()); ++mask) {
    std::vector<Edge> B;
    for (std::size_t k = 0; k < E.size(); ++k)
      if (mask >> k & 1) B.push_back(E[k]);
    std::vector<bool> done(G.size(), false);
    for (std::size_t r = 0; r < G.size(); ++r) {
      if (done[r]) continue;
      for (const Permutation& v : coset_members(G[r], B)) done[G.rank(v)] = true;
      std::string tag = "coset(" + G[r].one_line() + ",{";
      for (std::size_t k = 0; k < B.size(); ++k) tag += (k ? "," : "") + edge_string(B[k]);
      fam.members.push_back({tag + "})", coset_spline(tree, G[r], B)});
    }
  }
  return fam;
}

}  // namespace splinelab
