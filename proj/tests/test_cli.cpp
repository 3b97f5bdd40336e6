#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "splinelab/cli.hpp"

using namespace th;

namespace {

std::string data(const char* name) { return std::string(SPLINELAB_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "splinelab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("graph parsing") {
    auto g = parse_graph_json(R"({"n":3,"edges":[[1,2],[2,3]]})");
    CHECK(g == SimpleGraph::path(3));
    CHECK_THROWS_AS(parse_graph_json(R"({"n":3,"edges":[[1,1]]})"), Error);
    CHECK_THROWS_AS(parse_graph_json(R"({"n":3,"edges":[[1,4]]})"), Error);
    CHECK_THROWS_AS(parse_graph_json(R"({"n":3})"), Error);
    CHECK_THROWS_AS(parse_graph_json("not json"), Error);
    CHECK_THROWS_AS(read_graph_file(data("missing.json")), Error);
  }

  TEST_CASE("invariants report") {
    auto r = invariants_report(SimpleGraph::path(3));
    CHECK(r["D"] == "7");
    CHECK(r["L1"]["h"] == "h[2,1] + h[3]");
    CHECK(r["L1"]["s"] == "s[2,1] + 2*s[3]");
    CHECK(r["R1"]["s"] == "2*s[2,1]");
    CHECK(r["connectivity"]["k"] == "1");
    CHECK(r["block_cut"]["cut_vertices"] == json::array({"2"}));
  }

  TEST_CASE("verify agrees on small graphs") {
    VerifyOptions opt;
    auto v = verify_graph(SimpleGraph::star(4), opt);
    CHECK(v.ok);
    CHECK(v.report["status"] == "verified");
    CHECK(v.report["oracle"]["dimension"] == "13");
    opt.degree = 2;
    auto w = verify_graph(SimpleGraph::complete(4), opt);
    CHECK(w.ok);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"invariants", data("p3.json")}).code == kVerified);
    CHECK(run({"verify", data("k4.json")}).code == kVerified);
    CHECK(run({"verify", data("disconnected.json")}).code == kOperational);
    CHECK(run({"verify", data("missing.json")}).code == kOperational);
    CHECK(run({"verify", "--side", "X", data("p3.json")}).code == kOperational);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == kOperational);
    auto d = run({"invariants", data("disconnected.json")});
    CHECK(d.code == kOperational);
    CHECK(d.err.find("DisconnectedInput") != std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    auto a = run({"batch", "--n", "4", "--samples", "5", "--seed", "3"});
    auto b = run({"batch", "--n", "4", "--samples", "5", "--seed", "3"});
    CHECK(a.code == kVerified);
    CHECK(a.out == b.out);
    auto s = json::parse(a.out);
    CHECK(s["graphs"] == "5");
    CHECK(s["failed"] == "0");
    CHECK(run({"verify", data("p3.json")}).out == run({"verify", data("p3.json")}).out);
  }

  TEST_CASE("batch over all graphs") {
    auto a = run({"batch", "--n", "4", "--all"});
    CHECK(a.code == kVerified);
    CHECK(json::parse(a.out)["graphs"] == "38");
    CHECK(run({"batch", "--n", "2", "--all"}).code == kOperational);
  }

  TEST_CASE("cayley export") {
    auto j = cayley_json(SimpleGraph::path(3));
    CHECK(j["vertices"].size() == 6);
    CHECK(j["edges"].size() == 6);
    auto dot = cayley_dot(SimpleGraph::path(3));
    CHECK(dot.rfind("graph cayley {", 0) == 0);
    CHECK(dot.find("\"123\" -- \"213\"") != std::string::npos);
    CHECK(run({"cayley", "--format", "json", data("p3.json")}).code == kVerified);
  }
}
