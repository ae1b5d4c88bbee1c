#include <stdexcept>
#include "doctest.h"
#include "hanoihedral/errors.hpp"
#include "report.hpp"

using namespace hh::cli;

TEST_CASE("report document passes and round-trips") {
  RunOptions options;
  options.max_depth = 2;
  Json report = build_report(3, options);
  CHECK(report["status"] == "pass");
  CHECK(report["rigid_kernel"]["descriptor"] == "finite: Klein four group");
  CHECK(report["indices"].size() == 2);
  CHECK(report["indices"][1]["order"] == "648");
  CHECK(report["closure"]["level1_index"] == "2");
  CHECK(report["nucleus"]["size"] == 4);

  // parse and re-emit byte-identical: keys keep their documented order
  std::string dumped = report.dump(2);
  Json parsed = Json::parse(dumped);
  CHECK(parsed.dump(2) == dumped);

  std::string text = render_text(report);
  CHECK(text.find("all checks pass") != std::string::npos);
}

TEST_CASE("report validates arguments") {
  RunOptions options;
  CHECK_THROWS_AS((void)build_report(4, options), std::invalid_argument);
  options.max_depth = 7;  // far beyond the degree policy
  CHECK_THROWS_AS((void)build_report(3, options), hh::resource_error);
}

TEST_CASE("verify suites") {
  RunOptions options;
  CHECK(known_suite("kernel"));
  CHECK_FALSE(known_suite("nonsense"));

  auto nucleus = run_suite("nucleus", {3, 5}, options);
  CHECK(nucleus.ok);
  auto kernel = run_suite("kernel", {3}, options);
  CHECK(kernel.ok);
  for (const auto& line : kernel.lines)
    CHECK(line.rfind("[pass]", 0) == 0);
}

TEST_CASE("patterns summary") {
  Json p = patterns_summary(3, 3, false);
  CHECK(p["allowed_patterns"] == "648");
  CHECK(p["truncation_count"] == "816293376");
  CHECK_THROWS_AS((void)patterns_summary(4, 0, false), std::invalid_argument);
}
