#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "splinelab/perm.hpp"

namespace splinelab {

using Rational = mpq_class;

std::string rational_string(const Rational& q);  // "p/q" or "p"

struct Monomial {
  std::array<std::uint8_t, kMaxN> e{};

  int degree() const;
  // graded lex: lower degree first; within a degree t_1 > t_2 > ... so t_1^d comes first
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(int n) : n_(n) {}
  static Poly constant(int n, const Rational& c);
  static Poly variable(int n, int i);
  static Poly monomial(int n, const Monomial& m, const Rational& c = 1);
  static Poly linear(int n, int a, int b);  // t_a - t_b

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;

  Poly graded_piece(int d) const;
  Poly act(const Permutation& w) const;  // t_i -> t_{w(i)}
  Poly substitute(int b, int a) const;   // t_b := t_a
  bool in_linear_ideal(int a, int b) const;
  // exact quotient by t_a - t_b; remainder must vanish (used by tests as a division oracle)
  bool divide_linear(int a, int b, Poly* quotient) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  int n_ = 0;
  Terms terms_;
};

// degree-d monomials in n variables, graded-lex order
class MonomialIndex {
 public:
  MonomialIndex(int n, int d);
  int n() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return mons_.size(); }
  const Monomial& operator[](std::size_t k) const { return mons_[k]; }
  const std::vector<Monomial>& monomials() const { return mons_; }
  std::size_t index(const Monomial& m) const;  // throws BadIndex if absent

 private:
  int n_, d_;
  std::vector<Monomial> mons_;
  std::map<Monomial, std::size_t> idx_;
};

Monomial act_monomial(const Permutation& w, const Monomial& m);

}  // namespace splinelab
