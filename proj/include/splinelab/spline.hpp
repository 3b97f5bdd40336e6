#pragma once

#include <string>
#include <vector>

#include "splinelab/graph.hpp"
#include "splinelab/perm.hpp"
#include "splinelab/poly.hpp"

namespace splinelab {

enum class Side { Left, Right };

// values indexed by the lexicographic rank of the permutation
class Spline {
 public:
  Spline() = default;
  Spline(SimpleGraph g, std::vector<Poly> values);
  static Spline zero(const SimpleGraph& g);

  const SimpleGraph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  const std::vector<Poly>& values() const { return values_; }
  const Poly& at(const Permutation& w) const;
  const Poly& at_rank(std::size_t r) const { return values_[r]; }

  bool is_zero() const;
  std::vector<Permutation> support() const;
  int degree() const;  // -1 for the zero spline
  bool is_homogeneous() const;
  std::vector<std::string> render() const;  // "w: poly" over the support

  Spline& operator+=(const Spline& o);
  Spline& operator-=(const Spline& o);
  Spline& operator*=(const Rational& c);
  friend Spline operator+(Spline a, const Spline& b) { return a += b; }
  friend Spline operator-(Spline a, const Spline& b) { return a -= b; }
  friend Spline operator*(Spline a, const Rational& c) { return a *= c; }
  friend Spline operator*(const Spline& a, const Spline& b);
  friend bool operator==(const Spline& a, const Spline& b) {
    return a.graph_ == b.graph_ && a.values_ == b.values_;
  }

 private:
  SimpleGraph graph_;
  std::vector<Poly> values_;
};

bool is_spline(const Spline& rho);
bool is_spline(const Spline& rho, const LabeledCayleyGraph& cg);

Spline dot_action(const Permutation& w, const Spline& rho);
Spline module_action(Side side, const Poly& f, const Spline& rho);
// Omega(rho)(v) = omega . rho(omega^-1 v omega), a spline on omega(graph)
Spline relabel(const Permutation& omega, const Spline& rho);

Spline constant_one(const SimpleGraph& g);
Spline t_bar(const SimpleGraph& g, int i);
Spline x_bar(const SimpleGraph& g, int i);

Spline coset_spline(const SimpleGraph& tree, const Permutation& w, const std::vector<Edge>& B);
// f_A^s with G_s the component of g - s containing `inner`; value t_{w(inner)} - t_{w(outer)}
Spline cut_edge_spline(const SimpleGraph& g, Edge s, const std::vector<int>& A, int inner);
inline Spline cut_edge_spline(const SimpleGraph& g, Edge s, const std::vector<int>& A) {
  return cut_edge_spline(g, s, A, s.i);
}
Spline cut_vertex_spline(const SimpleGraph& g, int j, const std::vector<int>& G, int k);

struct FamilyMember {
  std::string tag;
  Spline spline;
};

struct SplineFamily {
  std::vector<FamilyMember> members;
  std::size_t size() const { return members.size(); }
  const Spline* find(const std::string& tag) const;
};

enum class FamilyKind { F, B, LS, RS };

SplineFamily family(FamilyKind kind, const SimpleGraph& g);
// every distinct coset spline f_w^B of a tree
SplineFamily coset_spline_family(const SimpleGraph& tree);

// k-subsets of [n] in lexicographic order
std::vector<std::vector<int>> subsets_of_size(int n, int k);
std::string set_string(const std::vector<int>& s);
std::string edge_string(Edge e);

}  // namespace splinelab
