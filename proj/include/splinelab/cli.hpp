#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "splinelab/graph.hpp"
#include "splinelab/spline_space.hpp"

namespace splinelab {

using json = nlohmann::ordered_json;

enum ExitCode { kVerified = 0, kMismatch = 1, kOperational = 2 };

SimpleGraph parse_graph_json(const std::string& text);
SimpleGraph read_graph_file(const std::string& path);

json invariants_report(const SimpleGraph& g);

struct VerifyOptions {
  int degree = 1;
  bool left = true;
  bool right = true;
  OracleOptions oracle;
};

struct VerifyResult {
  json report;
  bool ok;
};

VerifyResult verify_graph(const SimpleGraph& g, const VerifyOptions& opt);

struct BatchOptions {
  int n = 4;
  bool all = false;
  int samples = 0;
  unsigned long long seed = 0;
  VerifyOptions verify;
};

VerifyResult batch(const BatchOptions& opt);

std::string cayley_dot(const SimpleGraph& g);
json cayley_json(const SimpleGraph& g);

// full command line entry point; returns the exit code
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splinelab
