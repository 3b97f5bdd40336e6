#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "splinelab/error.hpp"
#include "splinelab/generate.hpp"
#include "splinelab/kernels.hpp"
#include "splinelab/spline_space.hpp"

using namespace th;

TEST_SUITE("kernels") {
  TEST_CASE("map_indexed keeps order") {
    auto sq = [](std::size_t k) { return static_cast<long>(k * k); };
    auto a = map_indexed<long>(200, sq, Exec::Serial);
    auto b = map_indexed<long>(200, sq, Exec::Parallel);
    CHECK(a == b);
    CHECK(b[13] == 169);
    CHECK(map_indexed<int>(0, [](std::size_t) { return 1; }).empty());
  }

  TEST_CASE("map_indexed rethrows") {
    auto f = [](std::size_t k) -> int {
      if (k == 7) throw Error(ErrorKind::BadIndex, "seven");
      return 0;
    };
    CHECK_THROWS_AS(map_indexed<int>(20, f, Exec::Parallel), Error);
    CHECK_THROWS_AS(map_indexed<int>(20, f, Exec::Serial), Error);
  }

  TEST_CASE("serial and parallel constraint assembly agree") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
      int n = 3 + trial % 3;
      auto g = random_connected_graph(n, rng);
      auto cg = cayley_graph(g);
      for (int d = 0; d <= 2; ++d) {
        MonomialIndex mons(n, d);
        auto a = assemble_constraints(cg, mons, Exec::Serial);
        auto b = assemble_constraints(cg, mons, Exec::Parallel);
        CHECK(a.equalities == b.equalities);
        CHECK(a.sums == b.sums);
      }
    }
  }

  TEST_CASE("serial and parallel bases agree") {
    OracleOptions ser, par;
    ser.exec = Exec::Serial;
    par.exec = Exec::Parallel;
    for (const auto& g : {SimpleGraph::path(4), SimpleGraph::star(4), cycle4()}) {
      auto a = splines_basis(g, 2, ser), b = splines_basis(g, 2, par);
      CHECK(a.vectors == b.vectors);
      CHECK(a.readout == b.readout);
    }
  }
}
