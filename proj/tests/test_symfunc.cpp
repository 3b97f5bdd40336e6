#include <doctest.h>

#include "helpers.hpp"
#include "splinelab/symfunc.hpp"

using namespace th;

namespace {

using B = SymFunc::Basis;

SymFunc h(const Partition& p, int c = 1) { return SymFunc::single(B::H, p, c); }
SymFunc s(const Partition& p, int c = 1) { return SymFunc::single(B::S, p, c); }

long long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }

long long class_size(const Partition& mu) {
  int n = 0;
  long long z = 1;
  std::map<int, int> mult;
  for (int p : mu) {
    n += p;
    z *= p;
    ++mult[p];
  }
  for (auto [p, m] : mult) z *= fact(m);
  return fact(n) / z;
}

}  // namespace

TEST_SUITE("symfunc") {
  TEST_CASE("Murnaghan-Nakayama values") {
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {2, 1}) == 0);
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK(mn_character({3, 1}, {2, 2}) == -1);
    CHECK(mn_character({2, 2}, {3, 1}) == -1);
    CHECK(mn_character({3, 2}, {1, 1, 1, 1, 1}) == 5);
    CHECK(mn_character({1, 1, 1, 1}, {2, 1, 1}) == -1);
    CHECK(mn_character({4}, {3, 1}) == 1);
  }

  TEST_CASE("row and column orthogonality") {
    for (int n = 1; n <= 6; ++n) {
      auto parts = integer_partitions(n);
      for (const auto& a : parts)
        for (const auto& b : parts) {
          long long sum = 0;
          for (const auto& mu : parts) sum += class_size(mu) * mn_character(a, mu) * mn_character(b, mu);
          CHECK(sum == (a == b ? fact(n) : 0));
        }
    }
  }

  TEST_CASE("h to s examples") {
    CHECK(h_to_s(h({2, 1})) == s({2, 1}) + s({3}));
    CHECK(h_to_s(h({1, 1, 1})) == s({1, 1, 1}) + s({2, 1}, 2) + s({3}));
    CHECK(h_to_s(h({2, 2})) == s({2, 2}) + s({3, 1}) + s({4}));
    CHECK(h_to_s(h({3, 1}) - h({4})) == s({3, 1}));
  }

  TEST_CASE("h to s matches permutation characters on tabloids") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& lam : integer_partitions(n)) {
        auto chi = character_of(h_to_s(h(lam)));
        for (const auto& mu : integer_partitions(n))
          CHECK(chi.at(mu) == Rational(static_cast<long>(oracle::tabloid_fixed_points(lam, oracle::perm_with_cycle_type(mu)))));
      }
  }

  TEST_CASE("round trips") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& lam : integer_partitions(n)) {
        CHECK(s_to_h(h_to_s(h(lam))) == h(lam));
        CHECK(h_to_s(s_to_h(s(lam))) == s(lam));
        CHECK(decompose(character_of(s(lam)), n) == s(lam));
      }
  }

  TEST_CASE("pieri") {
    auto m = pieri({2, 1}, 1);
    CHECK(m == std::map<Partition, Integer>{{{2, 1, 1}, 1}, {{2, 2}, 1}, {{3, 1}, 1}});
    CHECK(pieri({}, 3) == std::map<Partition, Integer>{{{3}, 1}});
  }

  TEST_CASE("decompose") {
    ClassFunction regular;
    for (const auto& mu : integer_partitions(3)) regular[mu] = 0;
    regular[{1, 1, 1}] = 6;
    CHECK(decompose(regular, 3) == s({1, 1, 1}) + s({2, 1}, 2) + s({3}));
    ClassFunction bad = regular;
    bad[{1, 1, 1}] = 1;
    CHECK_THROWS_AS(decompose(bad, 3), Error);
    ClassFunction neg = regular;
    neg[{1, 1, 1}] = -1;
    neg[{2, 1}] = -1;
    neg[{3}] = -1;
    CHECK_THROWS_AS(decompose(neg, 3), Error);
  }

  TEST_CASE("dimension") {
    CHECK(dimension(h({2, 1})) == 3);
    CHECK(dimension(s({2, 1})) == 2);
    CHECK(dimension(h({4, 4})) == 70);
    CHECK(dimension(s({3, 2})) == 5);
    CHECK(dimension(s({2, 1}) + s({3}, 2)) == 4);
  }

  TEST_CASE("h positivity") {
    auto a = h_positivity(s({2, 1}) + s({3}, 2));
    CHECK(a.positive);
    CHECK_FALSE(a.witness);
    auto b = h_positivity(s({2, 1}));
    CHECK_FALSE(b.positive);
    REQUIRE(b.witness);
    CHECK(*b.witness == Partition{3});
  }

  TEST_CASE("rendering") {
    CHECK((h({3, 1}, 2) + h({4})).to_string() == "2*h[3,1] + h[4]");
    CHECK((s({2, 1}) - s({3})).to_string() == "s[2,1] - s[3]");
    CHECK(SymFunc::zero(B::S, 3).to_string() == "0");
    CHECK(partition_string({3, 1}) == "[3,1]");
    CHECK(is_partition({3, 1}));
    CHECK_FALSE(is_partition({1, 3}));
  }
}
