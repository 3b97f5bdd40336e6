#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splinelab {

class SimpleGraph;
struct Edge;

inline constexpr int kMaxN = 16;
inline constexpr int kDefaultCap = 7;

// one-line notation, 1-based values; images_[i-1] = w(i)
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  static Permutation from_images(const std::vector<int>& images);
  static Permutation from_one_line(std::string_view s);  // "231", n <= 9
  static Permutation transposition(int n, int i, int j);

  int n() const { return n_; }
  int operator()(int i) const { return images_[i - 1]; }
  std::vector<int> images() const;
  Permutation inverse() const;
  bool is_identity() const;
  std::string one_line() const;
  std::vector<int> cycle_type() const;  // descending

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  int n_ = 0;
  std::array<std::int8_t, kMaxN> images_{};
};

// (w*v)(i) = w(v(i))
Permutation compose(const Permutation& w, const Permutation& v);
inline Permutation operator*(const Permutation& w, const Permutation& v) { return compose(w, v); }

// All of S_n in lexicographic order of one-line notation.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);
  int n() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  const Permutation& operator[](std::size_t r) const { return elems_[r]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  std::size_t rank(const Permutation& w) const;  // lexicographic index
  std::size_t identity_rank() const { return 0; }

 private:
  int n_;
  std::vector<Permutation> elems_;
  std::vector<std::size_t> fact_;
};

// cached, thread safe, n <= 8
const SymmetricGroup& symmetric_group(int n);

struct CayleyEdge {
  std::size_t w, v;  // ranks, w < v
  int a, b;          // label t_a - t_b, a < b
};

struct LabeledCayleyGraph {
  int n = 0;
  std::vector<Edge> generators;
  std::vector<CayleyEdge> edges;  // sorted by (w, v)
  std::vector<std::vector<std::size_t>> adjacency;
  const SymmetricGroup* group = nullptr;
};

LabeledCayleyGraph cayley_graph(const SimpleGraph& g, int cap = kDefaultCap);
int gamma_length(const LabeledCayleyGraph& cg, const Permutation& w);
std::vector<int> gamma_lengths(const LabeledCayleyGraph& cg);

// w<B>: v with w^-1 v preserving the components of ([n], B)
std::vector<Permutation> coset_members(const Permutation& w, const std::vector<Edge>& B);

struct ConjugacyClass {
  std::vector<int> cycle_type;
  Permutation representative;
  long long size;
};

// reverse lexicographic: (n), (n-1,1), ..., (1^n)
std::vector<std::vector<int>> integer_partitions(int n);

std::vector<ConjugacyClass> conjugacy_classes(int n, int cap = 8);

}  // namespace splinelab
