#include "splinelab/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "splinelab/error.hpp"

namespace splinelab {

std::string partition_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s + "]";
}

bool is_partition(const Partition& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] <= 0 || (k && p[k] > p[k - 1])) return false;
  return true;
}

namespace {

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

void check_partition(const Partition& p) {
  if (!is_partition(p)) throw Error(ErrorKind::MalformedInput, "not a partition: " + partition_string(p));
}

}  // namespace

SymFunc SymFunc::zero(Basis b, int n) {
  SymFunc f;
  f.basis = b;
  f.n = n;
  return f;
}

SymFunc SymFunc::single(Basis b, const Partition& p, const Integer& c) {
  SymFunc f = zero(b, weight(p));
  f.add(p, c);
  return f;
}

void SymFunc::add(const Partition& p, const Integer& c) {
  check_partition(p);
  if (weight(p) != n) throw Error(ErrorKind::SizeMismatch, "partition " + partition_string(p) + " is not of " + std::to_string(n));
  if (c == 0) return;
  auto [it, fresh] = coeffs.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.coeffs.empty()) return *this;
  if (coeffs.empty() && n != o.n) n = o.n;
  if (basis != o.basis || n != o.n) throw Error(ErrorKind::SizeMismatch, "symmetric function sum");
  for (const auto& [p, c] : o.coeffs) add(p, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  if (o.coeffs.empty()) return *this;
  if (coeffs.empty() && n != o.n) n = o.n;
  if (basis != o.basis || n != o.n) throw Error(ErrorKind::SizeMismatch, "symmetric function difference");
  for (const auto& [p, c] : o.coeffs) add(p, -c);
  return *this;
}

SymFunc operator*(const Integer& c, SymFunc a) {
  if (c == 0) a.coeffs.clear();
  for (auto& [p, x] : a.coeffs) x *= c;
  return a;
}

std::string SymFunc::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  char b = basis == Basis::H ? 'h' : 's';
  for (const auto& [p, c] : coeffs) {
    Integer a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (a != 1) s += a.get_str() + "*";
    s += b + partition_string(p);
  }
  return s;
}

namespace {

// beta-set Murnaghan-Nakayama
long long mn_beta(std::vector<int> beta, const Partition& mu, std::size_t pos) {
  if (pos == mu.size()) return 1;
  int r = mu[pos];
  std::set<int> bs(beta.begin(), beta.end());
  long long total = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    int b = beta[k];
    if (b - r < 0 || bs.count(b - r)) continue;
    int between = 0;
    for (int x : beta)
      if (x > b - r && x < b) ++between;
    std::vector<int> next = beta;
    next[k] = b - r;
    long long sub = mn_beta(next, mu, pos + 1);
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  check_partition(lambda);
  check_partition(mu);
  if (weight(lambda) != weight(mu)) throw Error(ErrorKind::SizeMismatch, "mn_character");
  std::vector<int> beta;
  int l = static_cast<int>(lambda.size());
  for (int i = 0; i < l; ++i) beta.push_back(lambda[i] + l - 1 - i);
  return mn_beta(beta, mu, 0);
}

std::map<Partition, Integer> pieri(const Partition& lambda, int k) {
  std::map<Partition, Integer> out;
  std::size_t len = lambda.size();
  Partition mu(len + 1, 0);
  auto part = [&](std::size_t i) { return i < len ? lambda[i] : 0; };
  auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
    if (i == len + 1) {
      if (rest == 0) {
        Partition p;
        for (int x : mu)
          if (x > 0) p.push_back(x);
        out[p] += 1;
      }
      return;
    }
    int hi = i == 0 ? part(0) + rest : std::min(part(i) + rest, part(i - 1));
    for (int x = part(i); x <= hi; ++x) {
      mu[i] = x;
      self(self, i + 1, rest - (x - part(i)));
    }
  };
  rec(rec, 0, k);
  return out;
}

SymFunc h_to_s(const SymFunc& f) {
  if (f.basis == SymFunc::Basis::S) return f;
  SymFunc out = SymFunc::zero(SymFunc::Basis::S, f.n);
  for (const auto& [mu, c] : f.coeffs) {
    std::map<Partition, Integer> cur{{Partition{}, 1}};
    for (int part : mu) {
      std::map<Partition, Integer> next;
      for (const auto& [lam, a] : cur)
        for (const auto& [nu, b] : pieri(lam, part)) next[nu] += a * b;
      cur = std::move(next);
    }
    for (const auto& [lam, a] : cur) out.add(lam, c * a);
  }
  return out;
}

SymFunc s_to_h(const SymFunc& f) {
  if (f.basis == SymFunc::Basis::H) return f;
  SymFunc rest = f;
  SymFunc out = SymFunc::zero(SymFunc::Basis::H, f.n);
  // h_lambda = s_lambda + terms strictly larger in dominance, hence lexicographically larger
  while (!rest.coeffs.empty()) {
    auto [lam, c] = *rest.coeffs.begin();
    out.add(lam, c);
    rest -= h_to_s(SymFunc::single(SymFunc::Basis::H, lam, c));
  }
  return out;
}

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer hook_dimension(const Partition& p) {
  Integer prod = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++leg;
      prod *= arm + leg + 1;
    }
  return factorial(weight(p)) / prod;
}

}  // namespace

SymFunc decompose(const ClassFunction& chi, int n) {
  auto classes = conjugacy_classes(n, 8);
  if (chi.size() != classes.size()) throw Error(ErrorKind::SizeMismatch, "class function is not total");
  Rational nfact = factorial(n);
  SymFunc out = SymFunc::zero(SymFunc::Basis::S, n);
  for (const auto& lam : integer_partitions(n)) {
    Rational acc = 0;
    for (const auto& cls : classes) {
      auto it = chi.find(cls.cycle_type);
      if (it == chi.end()) throw Error(ErrorKind::SizeMismatch, "class function missing a class");
      acc += Rational(static_cast<long>(cls.size)) * it->second * Rational(static_cast<long>(mn_character(lam, cls.cycle_type)));
    }
    acc /= nfact;
    if (acc.get_den() != 1 || acc < 0)
      throw Error(ErrorKind::IntegralityViolation,
                  "multiplicity of s" + partition_string(lam) + " is " + rational_string(acc));
    out.add(lam, acc.get_num());
  }
  return out;
}

Integer dimension(const SymFunc& f) {
  Integer total = 0;
  for (const auto& [p, c] : f.coeffs) {
    if (f.basis == SymFunc::Basis::S) {
      total += c * hook_dimension(p);
    } else {
      Integer m = factorial(f.n);
      for (int part : p) m /= factorial(part);
      total += c * m;
    }
  }
  return total;
}

ClassFunction character_of(const SymFunc& f) {
  SymFunc s = h_to_s(f);
  ClassFunction chi;
  for (const auto& mu : integer_partitions(f.n)) {
    Integer v = 0;
    for (const auto& [lam, c] : s.coeffs) v += c * static_cast<long>(mn_character(lam, mu));
    chi[mu] = Rational(v);
  }
  return chi;
}

HPositivity h_positivity(const SymFunc& f) {
  SymFunc h = s_to_h(f);
  for (const auto& [p, c] : h.coeffs)
    if (c < 0) return {false, p};
  return {true, std::nullopt};
}

}  // namespace splinelab
