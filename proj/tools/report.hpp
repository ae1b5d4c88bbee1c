#pragma once

// Report document construction and the verification suites behind the
// command-line front end.  Big integers are rendered as decimal strings and
// keys are emitted in a fixed documented order.

#include <string>
#include <vector>

#include "json.hpp"

namespace hh::cli {

using Json = nlohmann::ordered_json;

struct RunOptions {
  int max_depth = 2;
  unsigned long long seed = 20240801;
  int max_domain = 200;  // chain-degree cap; lifted by the large-run override
};

// full verification report for one alphabet size
Json build_report(int d, const RunOptions& options);
std::string render_text(const Json& report);

struct SuiteResult {
  bool ok = true;
  std::vector<std::string> lines;
};

// suite is one of: indices, kernel, closure, nucleus, all
bool known_suite(const std::string& suite);
SuiteResult run_suite(const std::string& suite, const std::vector<int>& ds,
                      const RunOptions& options);

// allowed-pattern counting behind the patterns subcommand
Json patterns_summary(int d, int depth, bool count_only);

}  // namespace hh::cli
