#include "splinelab/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "splinelab/error.hpp"
#include "splinelab/graph.hpp"

namespace splinelab {

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return from_images(im);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxN) throw Error(ErrorKind::TooLarge, "permutation size " + std::to_string(n));
  std::vector<bool> seen(n + 1, false);
  Permutation p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) {
    int x = images[i];
    if (x < 1 || x > n || seen[x]) throw Error(ErrorKind::MalformedInput, "not a bijection of [n]");
    seen[x] = true;
    p.images_[i] = static_cast<std::int8_t>(x);
  }
  return p;
}

Permutation Permutation::from_one_line(std::string_view s) {
  std::vector<int> im;
  for (char c : s) {
    if (c < '1' || c > '9') throw Error(ErrorKind::MalformedInput, "bad one-line string");
    im.push_back(c - '0');
  }
  return from_images(im);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw Error(ErrorKind::BadIndex, "transposition");
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

std::vector<int> Permutation::images() const {
  return std::vector<int>(images_.begin(), images_.begin() + n_);
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) p.images_[images_[i] - 1] = static_cast<std::int8_t>(i + 1);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::string Permutation::one_line() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (n_ < 10) {
      s.push_back(static_cast<char>('0' + images_[i]));
    } else {
      if (i) s.push_back(',');
      s += std::to_string(images_[i]);
    }
  }
  return s;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j] - 1) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Permutation compose(const Permutation& w, const Permutation& v) {
  if (w.n() != v.n()) throw Error(ErrorKind::SizeMismatch, "compose");
  std::vector<int> im(w.n());
  for (int i = 1; i <= w.n(); ++i) im[i - 1] = w(v(i));
  return Permutation::from_images(im);
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1 || n > 8) throw Error(ErrorKind::TooLarge, "symmetric group of degree " + std::to_string(n));
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  do {
    elems_.push_back(Permutation::from_images(im));
  } while (std::next_permutation(im.begin(), im.end()));
  fact_.assign(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact_[i] = fact_[i - 1] * i;
}

std::size_t SymmetricGroup::rank(const Permutation& w) const {
  if (w.n() != n_) throw Error(ErrorKind::SizeMismatch, "rank");
  // Lehmer code
  std::size_t r = 0;
  for (int i = 1; i <= n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n_; ++j)
      if (w(j) < w(i)) ++smaller;
    r += smaller * fact_[n_ - i];
  }
  return r;
}

const SymmetricGroup& symmetric_group(int n) {
  static std::mutex mu;
  static std::array<std::unique_ptr<SymmetricGroup>, 9> cache;
  if (n < 1 || n > 8) throw Error(ErrorKind::TooLarge, "symmetric group of degree " + std::to_string(n));
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n]) cache[n] = std::make_unique<SymmetricGroup>(n);
  return *cache[n];
}

LabeledCayleyGraph cayley_graph(const SimpleGraph& g, int cap) {
  int n = g.n();
  if (n > cap || n > 8) throw Error(ErrorKind::TooLarge, "Cayley graph for n=" + std::to_string(n));
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedInput, "cayley_graph");
  const SymmetricGroup& G = symmetric_group(n);
  LabeledCayleyGraph cg;
  cg.n = n;
  cg.generators = g.edges();
  cg.group = &G;
  cg.adjacency.assign(G.size(), {});
  for (std::size_t r = 0; r < G.size(); ++r) {
    const Permutation& w = G[r];
    for (const Edge& e : g.edges()) {
      Permutation v = w * Permutation::transposition(n, e.i, e.j);
      std::size_t s = G.rank(v);
      cg.adjacency[r].push_back(s);
      if (r < s) {
        int a = w(e.i), b = w(e.j);
        if (a > b) std::swap(a, b);
        cg.edges.push_back({r, s, a, b});
      }
    }
    std::sort(cg.adjacency[r].begin(), cg.adjacency[r].end());
  }
  std::sort(cg.edges.begin(), cg.edges.end(), [](const CayleyEdge& x, const CayleyEdge& y) {
    return std::pair(x.w, x.v) < std::pair(y.w, y.v);
  });
  return cg;
}

std::vector<int> gamma_lengths(const LabeledCayleyGraph& cg) {
  std::vector<int> dist(cg.adjacency.size(), -1);
  std::deque<std::size_t> q{0};
  dist[0] = 0;
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop_front();
    for (std::size_t v : cg.adjacency[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

int gamma_length(const LabeledCayleyGraph& cg, const Permutation& w) {
  return gamma_lengths(cg)[cg.group->rank(w)];
}

std::vector<Permutation> coset_members(const Permutation& w, const std::vector<Edge>& B) {
  int n = w.n();
  std::vector<int> comp(n + 1);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const Edge& e : B) {
    if (e.i < 1 || e.j > n) throw Error(ErrorKind::BadIndex, "coset_members");
    comp[find(e.i)] = find(e.j);
  }
  Permutation winv = w.inverse();
  std::vector<Permutation> out;
  for (const Permutation& v : symmetric_group(n).elements()) {
    Permutation u = winv * v;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = find(u(i)) == find(i);
    if (ok) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(int n, int cap) {
  if (n < 1) throw Error(ErrorKind::TooSmall, "conjugacy_classes");
  if (n > cap || n > kMaxN) throw Error(ErrorKind::TooLarge, "conjugacy_classes n=" + std::to_string(n));
  long long nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  std::vector<ConjugacyClass> out;
  for (const auto& mu : integer_partitions(n)) {
    std::vector<int> im(n);
    int pos = 0;
    for (int part : mu) {
      for (int k = 0; k < part; ++k) im[pos + k] = pos + (k + 1) % part + 1;
      pos += part;
    }
    long long z = 1;
    std::map<int, int> mult;
    for (int part : mu) ++mult[part];
    for (auto [k, m] : mult)
      for (int t = 1; t <= m; ++t) z *= static_cast<long long>(k) * t;
    out.push_back({mu, Permutation::from_images(im), nfact / z});
  }
  return out;
}

}  // namespace splinelab
