#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splinelab/poly.hpp"

namespace splinelab {

using Partition = std::vector<int>;  // weakly decreasing, positive parts
using Integer = mpz_class;

std::string partition_string(const Partition& p);  // "[3,1]"
bool is_partition(const Partition& p);

struct SymFunc {
  enum class Basis { H, S };
  Basis basis = Basis::S;
  int n = 0;
  std::map<Partition, Integer> coeffs;  // ascending lexicographic, no zeros

  static SymFunc zero(Basis b, int n);
  static SymFunc single(Basis b, const Partition& p, const Integer& c = 1);
  void add(const Partition& p, const Integer& c);
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const Integer& c, SymFunc a);
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis == b.basis && a.n == b.n && a.coeffs == b.coeffs;
  }
  std::string to_string() const;  // "2*h[3,1] + h[4]"
};

// traces keyed by cycle type
using ClassFunction = std::map<Partition, Rational>;

long long mn_character(const Partition& lambda, const Partition& mu);
SymFunc h_to_s(const SymFunc& f);
SymFunc s_to_h(const SymFunc& f);
// s_lambda * h_k by the Pieri rule, as a map of partitions
std::map<Partition, Integer> pieri(const Partition& lambda, int k);

SymFunc decompose(const ClassFunction& chi, int n);
Integer dimension(const SymFunc& f);  // dimension of the corresponding S_n-module
ClassFunction character_of(const SymFunc& f);

struct HPositivity {
  bool positive;
  std::optional<Partition> witness;
};
HPositivity h_positivity(const SymFunc& f);

}  // namespace splinelab
