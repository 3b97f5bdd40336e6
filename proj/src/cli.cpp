#include "splinelab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "splinelab/error.hpp"
#include "splinelab/generate.hpp"
#include "splinelab/kernels.hpp"
#include "splinelab/repchar.hpp"

namespace splinelab {

namespace {

std::string str(long long x) { return std::to_string(x); }

json edge_json(Edge e) { return json::array({str(e.i), str(e.j)}); }

json int_list(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(str(x));
  return a;
}

json symfunc_json(const SymFunc& f) {
  SymFunc h = f.basis == SymFunc::Basis::H ? f : s_to_h(f);
  SymFunc s = h_to_s(f);
  return {{"h", h.to_string()}, {"s", s.to_string()}, {"dimension", dimension(s).get_str()}};
}

json class_function_json(const ClassFunction& chi) {
  json o = json::object();
  for (auto it = chi.rbegin(); it != chi.rend(); ++it) o[partition_string(it->first)] = rational_string(it->second);
  return o;
}

json graph_echo(const SimpleGraph& g) {
  json edges = json::array();
  for (Edge e : g.edges()) edges.push_back(edge_json(e));
  return {{"n", str(g.n())}, {"edges", edges}};
}

}  // namespace

SimpleGraph parse_graph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorKind::MalformedInput, "expected an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw Error(ErrorKind::MalformedInput, "\"n\" must be an integer");
  long long n = j["n"].get<long long>();
  if (n < 1 || n > 100000) throw Error(ErrorKind::MalformedInput, "\"n\" out of range");
  if (!j["edges"].is_array()) throw Error(ErrorKind::MalformedInput, "\"edges\" must be an array");
  std::vector<std::pair<int, int>> es;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(ErrorKind::MalformedInput, "each edge must be a pair of integers");
    long long a = e[0].get<long long>(), b = e[1].get<long long>();
    if (a < 1 || b < 1 || a > n || b > n)
      throw Error(ErrorKind::MalformedInput, "edge [" + str(a) + "," + str(b) + "] out of range");
    es.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return SimpleGraph(static_cast<int>(n), es);
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

json invariants_report(const SimpleGraph& g) {
  json r;
  r["input"] = graph_echo(g);
  Connectivity c = connectivity(g);
  r["connectivity"] = {{"connected", c.connected}, {"k", str(c.k)}};
  if (!c.connected) throw Error(ErrorKind::DisconnectedInput, "graph is not connected");
  BlockCutData bc = block_cut(g);
  json blocks = json::array();
  for (const auto& b : bc.blocks) blocks.push_back(int_list(b));
  json ic = json::array();
  for (Edge e : bc.internal_cut_edges) ic.push_back(edge_json(e));
  json cm = json::object();
  for (int j : bc.cut_vertices) cm[str(j)] = str(bc.c_map[j]);
  r["block_cut"] = {{"cut_vertices", int_list(bc.cut_vertices)},
                    {"blocks", blocks},
                    {"leaf_blocks", int_list(bc.leaf_blocks)},
                    {"internal_blocks", int_list(bc.internal_blocks)},
                    {"internal_cut_edges", ic},
                    {"c", cm}};
  r["D"] = formula_D(g).get_str();
  SymFunc L1 = formula_L1(g);
  r["L1"] = symfunc_json(L1);
  r["R1"] = symfunc_json(formula_R1(g));
  HPositivity hp = h_positivity(h_to_s(L1));
  r["L1"]["h_positive"] = hp.positive;
  return r;
}

namespace {

struct Checker {
  json diffs = json::array();
  json flags = json::object();
  void check(const std::string& name, const std::string& expected, const std::string& actual) {
    bool ok = expected == actual;
    flags[name] = ok;
    if (!ok) diffs.push_back({{"check", name}, {"expected", expected}, {"actual", actual}});
  }
};

json side_report(const SimpleGraph& g, Side side, int d, const OracleOptions& oo, SymFunc* out) {
  ClassFunction chi = quotient_character(g, side, d, oo);
  SymFunc s = decompose(chi, g.n());
  HPositivity hp = h_positivity(s);
  json r = symfunc_json(s);
  r["traces"] = class_function_json(chi);
  r["h_positive"] = hp.positive;
  if (hp.witness) r["witness"] = partition_string(*hp.witness);
  if (out) *out = s;
  return r;
}

bool trivial(const SymFunc& s, int n) {
  for (const auto& [p, c] : s.coeffs)
    if (p != Partition{n}) return false;
  return true;
}

}  // namespace

VerifyResult verify_graph(const SimpleGraph& g, const VerifyOptions& opt) {
  int n = g.n();
  if (opt.degree < 1 || opt.degree > 2) throw Error(ErrorKind::BadIndex, "--degree must be 1 or 2");
  json r = invariants_report(g);
  r["degree"] = str(opt.degree);
  Checker ck;
  json oracle;
  int k = connectivity(g).k;
  if (opt.degree == 1) {
    std::string dim = str(static_cast<long long>(splines_dimension(g, 1, opt.oracle)));
    oracle["dimension"] = dim;
    ck.check("D_label_free", formula_D(g, FormulaVariant::LabelFree).get_str(), dim);
    ck.check("D_natural_label", formula_D(g, FormulaVariant::NaturalLabel).get_str(), dim);
    ck.check("D_recursive", formula_D(g, FormulaVariant::Recursive).get_str(), dim);
    if (opt.left) {
      SymFunc s;
      oracle["L"] = side_report(g, Side::Left, 1, opt.oracle, &s);
      ck.check("L1", h_to_s(formula_L1(g)).to_string(), s.to_string());
      ck.check("L1_natural_label", h_to_s(formula_L1(g, FormulaVariant::NaturalLabel)).to_string(), s.to_string());
      ck.check("L_trivial_iff_2_connected", k >= 2 ? "true" : "false", trivial(s, n) ? "true" : "false");
    }
    if (opt.right) {
      SymFunc s;
      oracle["R"] = side_report(g, Side::Right, 1, opt.oracle, &s);
      ck.check("R1", formula_R1(g).to_string(), s.to_string());
      ck.check("R1_natural_label", formula_R1(g, FormulaVariant::NaturalLabel).to_string(), s.to_string());
    }
  } else {
    oracle["dimension"] = str(static_cast<long long>(splines_dimension(g, 2, opt.oracle)));
    if (opt.left) {
      SymFunc s1, s2;
      oracle["L"] = side_report(g, Side::Left, 2, opt.oracle, &s2);
      s1 = decompose(quotient_character(g, Side::Left, 1, opt.oracle), n);
      ck.check("L_trivial_through_2_iff_3_connected", k >= 3 ? "true" : "false",
               trivial(s1, n) && trivial(s2, n) ? "true" : "false");
    }
    if (opt.right) oracle["R"] = side_report(g, Side::Right, 2, opt.oracle, nullptr);
  }
  r["oracle"] = oracle;
  r["agreement"] = ck.flags;
  r["diff"] = ck.diffs;
  bool ok = ck.diffs.empty();
  r["status"] = ok ? "verified" : "mismatch";
  return {r, ok};
}

VerifyResult batch(const BatchOptions& opt) {
  std::vector<SimpleGraph> graphs;
  if (opt.all) {
    if (opt.n > 5) throw Error(ErrorKind::TooLarge, "--all needs n <= 5");
    graphs = all_connected_graphs(opt.n);
  } else {
    std::mt19937_64 rng(opt.seed);
    for (int k = 0; k < opt.samples; ++k) graphs.push_back(random_connected_graph(opt.n, rng));
  }
  if (opt.n < 3) throw Error(ErrorKind::TooSmall, "batch needs n >= 3");
  if (oracle_vars(opt.n, opt.verify.degree) > opt.verify.oracle.budget_vars)
    throw Error(ErrorKind::BudgetExceeded, "n=" + str(opt.n) + " exceeds the variable budget");
  VerifyOptions vo = opt.verify;
  vo.oracle.exec = Exec::Serial;  // parallelism is across graphs here
  auto results = map_indexed<VerifyResult>(graphs.size(), [&](std::size_t k) { return verify_graph(graphs[k], vo); });
  json summary;
  summary["n"] = str(opt.n);
  summary["mode"] = opt.all ? "all" : "samples";
  if (!opt.all) summary["seed"] = std::to_string(opt.seed);
  summary["degree"] = str(opt.verify.degree);
  long long passed = 0;
  json failures = json::array();
  for (auto& res : results) {
    if (res.ok)
      ++passed;
    else
      failures.push_back(res.report);
  }
  summary["graphs"] = str(static_cast<long long>(results.size()));
  summary["passed"] = str(passed);
  summary["failed"] = str(static_cast<long long>(results.size()) - passed);
  summary["failures"] = failures;
  bool ok = failures.empty();
  summary["status"] = ok ? "verified" : "mismatch";
  return {summary, ok};
}

std::string cayley_dot(const SimpleGraph& g) {
  if (g.n() > 5) throw Error(ErrorKind::TooLarge, "Cayley export needs n <= 5");
  LabeledCayleyGraph cg = cayley_graph(g);
  const SymmetricGroup& G = *cg.group;
  std::ostringstream os;
  os << "graph cayley {\n";
  for (const Permutation& w : G.elements()) os << "  \"" << w.one_line() << "\";\n";
  for (const CayleyEdge& e : cg.edges)
    os << "  \"" << G[e.w].one_line() << "\" -- \"" << G[e.v].one_line() << "\" [label=\"t_" << e.a << " - t_"
       << e.b << "\"];\n";
  os << "}\n";
  return os.str();
}

json cayley_json(const SimpleGraph& g) {
  if (g.n() > 5) throw Error(ErrorKind::TooLarge, "Cayley export needs n <= 5");
  LabeledCayleyGraph cg = cayley_graph(g);
  const SymmetricGroup& G = *cg.group;
  json vs = json::array(), es = json::array();
  for (const Permutation& w : G.elements()) vs.push_back(w.one_line());
  for (const CayleyEdge& e : cg.edges)
    es.push_back({{"source", G[e.w].one_line()},
                  {"target", G[e.v].one_line()},
                  {"label", "t_" + str(e.a) + " - t_" + str(e.b)}});
  return {{"n", str(g.n())}, {"vertices", vs}, {"edges", es}};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"splinelab: splines on Cayley graphs of symmetric groups"};
  app.require_subcommand(1);
  std::size_t budget = kDefaultBudget;
  bool timing = false;

  std::string path;
  auto* inv = app.add_subcommand("invariants", "label-free invariants of a graph");
  inv->add_option("graph", path, "graph JSON file")->required();

  int degree = 1;
  std::string side = "both";
  auto* ver = app.add_subcommand("verify", "compare the brute-force oracle with the formulas");
  ver->add_option("graph", path, "graph JSON file")->required();
  ver->add_option("--degree", degree, "degree 1 or 2");
  ver->add_option("--side", side, "L, R or both")->check(CLI::IsMember({"L", "R", "both"}));
  ver->add_option("--budget-vars", budget, "largest oracle system to attempt");
  ver->add_flag("--timing", timing, "include wall-clock timing");

  BatchOptions bo;
  auto* bat = app.add_subcommand("batch", "verify many graphs");
  bat->add_option("--n", bo.n, "vertex count")->required();
  auto* all_flag = bat->add_flag("--all", bo.all, "every connected labeled graph");
  auto* samples = bat->add_option("--samples", bo.samples, "number of random graphs");
  bat->add_option("--seed", bo.seed, "random seed");
  bat->add_option("--degree", bo.verify.degree, "degree 1 or 2");
  bat->add_option("--budget-vars", budget, "largest oracle system to attempt");
  bat->add_flag("--timing", timing, "include wall-clock timing");
  all_flag->excludes(samples);

  std::string format = "dot";
  auto* cay = app.add_subcommand("cayley", "export the labeled Cayley graph");
  cay->add_option("graph", path, "graph JSON file")->required();
  cay->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kOperational;
  }

  auto start = std::chrono::steady_clock::now();
  auto add_timing = [&](json& r) {
    if (!timing) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    r["timing"] = {{"wall_ms", std::to_string(ms.count())}};
  };
  try {
    if (*inv) {
      out << invariants_report(read_graph_file(path)).dump(2) << "\n";
      return kVerified;
    }
    if (*ver) {
      VerifyOptions vo;
      vo.degree = degree;
      vo.left = side != "R";
      vo.right = side != "L";
      vo.oracle.budget_vars = budget;
      VerifyResult res = verify_graph(read_graph_file(path), vo);
      add_timing(res.report);
      out << res.report.dump(2) << "\n";
      return res.ok ? kVerified : kMismatch;
    }
    if (*bat) {
      if (!bo.all && bo.samples <= 0) throw Error(ErrorKind::MalformedInput, "give --all or --samples m");
      bo.verify.oracle.budget_vars = budget;
      VerifyResult res = batch(bo);
      add_timing(res.report);
      out << res.report.dump(2) << "\n";
      return res.ok ? kVerified : kMismatch;
    }
    if (*cay) {
      SimpleGraph g = read_graph_file(path);
      if (format == "dot")
        out << cayley_dot(g);
      else
        out << cayley_json(g).dump(2) << "\n";
      return kVerified;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kOperational;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kOperational;
  }
  return kOperational;
}

}  // namespace splinelab
