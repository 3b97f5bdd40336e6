#include "splinelab/poly.hpp"

#include <algorithm>

#include "splinelab/error.hpp"

namespace splinelab {

std::string rational_string(const Rational& q0) {
  Rational q = q0;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int Monomial::degree() const {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e > b.e;
}

Poly Poly::constant(int n, const Rational& c) {
  Poly p(n);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorKind::BadIndex, "variable t_" + std::to_string(i));
  Monomial m;
  m.e[i - 1] = 1;
  return monomial(n, m);
}

Poly Poly::monomial(int n, const Monomial& m, const Rational& c) {
  Poly p(n);
  p.add_term(m, c);
  return p;
}

Poly Poly::linear(int n, int a, int b) { return variable(n, a) - variable(n, b); }

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::graded_piece(int d) const {
  Poly p(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) p.terms_.emplace(m, c);
  return p;
}

Monomial act_monomial(const Permutation& w, const Monomial& m) {
  Monomial r;
  for (int i = 1; i <= w.n(); ++i) r.e[w(i) - 1] = m.e[i - 1];
  return r;
}

Poly Poly::act(const Permutation& w) const {
  if (w.n() != n_) throw Error(ErrorKind::SizeMismatch, "act");
  Poly p(n_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(act_monomial(w, m), c);
  return p;
}

Poly Poly::substitute(int b, int a) const {
  if (a < 1 || b < 1 || a > n_ || b > n_ || a == b) throw Error(ErrorKind::BadIndex, "substitute");
  Poly p(n_);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r.e[a - 1] = static_cast<std::uint8_t>(r.e[a - 1] + r.e[b - 1]);
    r.e[b - 1] = 0;
    p.add_term(r, c);
  }
  return p;
}

bool Poly::in_linear_ideal(int a, int b) const { return substitute(b, a).is_zero(); }

bool Poly::divide_linear(int a, int b, Poly* quotient) const {
  if (a < 1 || b < 1 || a > n_ || b > n_ || a == b) throw Error(ErrorKind::BadIndex, "divide_linear");
  // long division in t_a: repeatedly cancel the term with the largest power of t_a
  Poly rem = *this;
  Poly q(n_);
  while (true) {
    const Monomial* lead = nullptr;
    Rational lc;
    for (const auto& [m, c] : rem.terms_)
      if (m.e[a - 1] > 0 && (!lead || m.e[a - 1] > lead->e[a - 1] ||
                             (m.e[a - 1] == lead->e[a - 1] && lead->e < m.e))) {
        lead = &m;
        lc = c;
      }
    if (!lead) break;
    Monomial qm = *lead;
    qm.e[a - 1] -= 1;
    Poly step = Poly::monomial(n_, qm, lc);
    q += step;
    rem -= step * Poly::linear(n_, a, b);
  }
  if (quotient) *quotient = q;
  return rem.is_zero();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.n_ != n_) throw Error(ErrorKind::SizeMismatch, "poly add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.n_ != n_) throw Error(ErrorKind::SizeMismatch, "poly sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::SizeMismatch, "poly mul");
  Poly p(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kMaxN; ++i) m.e[i] = static_cast<std::uint8_t>(ma.e[i] + mb.e[i]);
      p.add_term(m, ca * cb);
    }
  return p;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // highest degree first, graded-lex within a degree
  std::vector<std::pair<Monomial, Rational>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  for (const auto& [m, c] : order) {
    std::string coef = rational_string(c);
    if (!s.empty()) {
      if (c < 0) {
        s += " - ";
        coef = coef.substr(1);
      } else {
        s += " + ";
      }
    }
    std::string body;
    for (int i = 0; i < n_; ++i) {
      if (!m.e[i]) continue;
      if (!body.empty()) body += "*";
      body += "t_" + std::to_string(i + 1);
      if (m.e[i] > 1) body += "^" + std::to_string(m.e[i]);
    }
    if (body.empty())
      s += coef;
    else if (coef == "1")
      s += body;
    else if (coef == "-1")
      s += "-" + body;
    else
      s += coef + "*" + body;
  }
  return s;
}

MonomialIndex::MonomialIndex(int n, int d) : n_(n), d_(d) {
  Monomial cur;
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == n - 1) {
      cur.e[var] = static_cast<std::uint8_t>(rest);
      mons_.push_back(cur);
      cur.e[var] = 0;
      return;
    }
    for (int k = rest; k >= 0; --k) {
      cur.e[var] = static_cast<std::uint8_t>(k);
      self(self, var + 1, rest - k);
    }
    cur.e[var] = 0;
  };
  rec(rec, 0, d);
  for (std::size_t k = 0; k < mons_.size(); ++k) idx_.emplace(mons_[k], k);
}

std::size_t MonomialIndex::index(const Monomial& m) const {
  auto it = idx_.find(m);
  if (it == idx_.end()) throw Error(ErrorKind::BadIndex, "monomial not of the indexed degree");
  return it->second;
}

}  // namespace splinelab
