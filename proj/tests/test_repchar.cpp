#include <doctest.h>

#include "helpers.hpp"
#include "splinelab/generate.hpp"
#include "splinelab/repchar.hpp"

using namespace th;

namespace {

using B = SymFunc::Basis;
SymFunc h(const Partition& p, int c = 1) { return SymFunc::single(B::H, p, c); }
SymFunc s(const Partition& p, int c = 1) { return SymFunc::single(B::S, p, c); }

}  // namespace

TEST_SUITE("repchar") {
  TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(12, 4) == 495);
    CHECK(binomial(3, 0) == 1);
    CHECK(binomial(3, 4) == 0);
  }

  TEST_CASE("D on small graphs") {
    CHECK(formula_D(SimpleGraph::path(3)) == 7);
    CHECK(formula_D(SimpleGraph::complete(3)) == 5);
    CHECK(formula_D(SimpleGraph::complete(4)) == 7);
    CHECK(formula_D(SimpleGraph::star(4)) == 13);
    CHECK(formula_D(dim_blockcut_example()) == 572);
    CHECK_THROWS_AS(formula_D(G(4, {{1, 2}, {3, 4}})), Error);
    CHECK_THROWS_AS(formula_D(SimpleGraph::path(2)), Error);
  }

  TEST_CASE("all D variants agree with the dense dimension") {
    for (int n = 3; n <= 4; ++n)
      for (const auto& g : all_connected_graphs(n)) {
        Integer want = static_cast<long>(oracle::splines_dimension(n, raw(g), 1));
        CHECK(formula_D(g, FormulaVariant::LabelFree) == want);
        CHECK(formula_D(g, FormulaVariant::NaturalLabel) == want);
        CHECK(formula_D(g, FormulaVariant::Recursive) == want);
      }
  }

  TEST_CASE("variants agree on the twelve vertex examples") {
    for (const auto& g : {block_cut_example(), dim_blockcut_example(), linear_example_11(), type_a_example()}) {
      auto d = formula_D(g);
      CHECK(formula_D(g, FormulaVariant::NaturalLabel) == d);
      CHECK(formula_D(g, FormulaVariant::Recursive) == d);
      CHECK(formula_L1(g, FormulaVariant::NaturalLabel) == formula_L1(g));
      CHECK(formula_R1(g, FormulaVariant::NaturalLabel) == formula_R1(g));
      CHECK(dimension(formula_L1(g)) + 12 == d);
      CHECK(dimension(formula_R1(g)) + 12 == d);
    }
  }

  TEST_CASE("character formulas") {
    CHECK(formula_L1(SimpleGraph::path(3)) == h({2, 1}) + h({3}));
    CHECK(formula_R1(SimpleGraph::path(3)) == s({2, 1}, 2));
    CHECK(formula_L1(SimpleGraph::complete(4)) == h({4}, 3));
    CHECK(formula_R1(SimpleGraph::complete(4)) == s({3, 1}));
    CHECK(formula_L1(SimpleGraph::star(4)) == h({3, 1}, 2) + h({4}));
    CHECK(formula_R1(SimpleGraph::star(4)) == s({3, 1}, 3));
    CHECK(dimension(formula_L1(SimpleGraph::star(4))) == 9);
    CHECK(formula_L1(dim_blockcut_example()) == h({8, 4}) + h({11, 1}, 5) + h({12}, 5));
    CHECK_THROWS_AS(formula_L1(SimpleGraph::path(3), FormulaVariant::Recursive), Error);
  }

  TEST_CASE("quotient characters") {
    auto p3 = SimpleGraph::path(3), k3 = SimpleGraph::complete(3);
    CHECK(decompose(quotient_character(p3, Side::Left, 1), 3) == s({2, 1}) + s({3}, 2));
    CHECK(decompose(quotient_character(p3, Side::Right, 1), 3) == s({2, 1}, 2));
    CHECK(decompose(quotient_character(k3, Side::Left, 1), 3) == s({3}, 2));
    CHECK(decompose(quotient_character(k3, Side::Right, 1), 3) == s({2, 1}));
    CHECK(decompose(quotient_character(p3, Side::Left, 0), 3) == s({3}));
    auto st = decompose(quotient_character(SimpleGraph::star(4), Side::Left, 2), 4);
    CHECK(st == s({2, 1, 1}) + s({3, 1}, 3) + s({4}, 3));
    CHECK_FALSE(h_positivity(st).positive);
  }

  TEST_CASE("quotient characters match the formulas at degree 1") {
    for (const auto& g : all_connected_graphs(4)) {
      CHECK(decompose(quotient_character(g, Side::Left, 1), 4) == h_to_s(formula_L1(g)));
      CHECK(decompose(quotient_character(g, Side::Right, 1), 4) == formula_R1(g));
    }
  }

  TEST_CASE("triviality") {
    CHECK(triviality_check(SimpleGraph::complete(4), 2));
    CHECK(triviality_check(cycle4(), 2));
    CHECK_FALSE(triviality_check(SimpleGraph::path(4), 2));
    CHECK(triviality_check(SimpleGraph::complete(4), 3));
    CHECK_FALSE(triviality_check(cycle4(), 3));
  }
}
