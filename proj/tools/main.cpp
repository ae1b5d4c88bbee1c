// Command-line front end: verification reports and machine-readable results
// for the mirror-generated tree groups.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hanoihedral/errors.hpp"
#include "report.hpp"

namespace {

constexpr int kLargeDomainCap = 1000;

int run_report(int d, hh::cli::RunOptions options, const std::string& format) {
  auto report = hh::cli::build_report(d, options);
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << hh::cli::render_text(report);
  return report["status"] == "pass" ? 0 : 1;
}

int run_verify(const std::string& suite, const std::vector<int>& ds,
               const hh::cli::RunOptions& options) {
  auto result = hh::cli::run_suite(suite, ds, options);
  for (const auto& line : result.lines) std::cout << line << "\n";
  std::cout << (result.ok ? "verification passed" : "verification FAILED") << "\n";
  return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational engine for the dihedral Hanoi-like tree groups"};
  app.require_subcommand(1);

  hh::cli::RunOptions options;
  bool allow_large = false;
  app.add_option("--seed", options.seed, "seed for randomized consistency spot checks");
  app.add_flag("--allow-large", allow_large,
               "lift the chain-degree policy cap for stretch runs");

  auto* report = app.add_subcommand("report", "full verification report for one d");
  int report_d = 3;
  std::string format = "text";
  report->add_option("--d", report_d, "alphabet size (odd, >= 3)")->required();
  report->add_option("--max-depth", options.max_depth, "deepest level quotient to compute");
  report->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "run a named acceptance suite");
  std::string suite = "all";
  std::vector<int> ds{3};
  verify->add_option("--suite", suite, "indices | kernel | closure | nucleus | all");
  verify->add_option("--d", ds, "alphabet sizes, comma separated")->delimiter(',');

  auto* patterns = app.add_subcommand("patterns", "allowed-pattern counting");
  int patterns_d = 3;
  int patterns_depth = 0;
  bool count_only = false;
  patterns->add_option("--d", patterns_d, "alphabet size (odd, >= 3)")->required();
  patterns->add_option("--depth", patterns_depth, "also count depth-n truncations");
  patterns->add_flag("--count-only", count_only, "print counts only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (allow_large) options.max_domain = kLargeDomainCap;

  try {
    if (report->parsed()) return run_report(report_d, options, format);
    if (verify->parsed()) {
      if (!hh::cli::known_suite(suite)) {
        std::cerr << "unknown suite '" << suite
                  << "'; expected indices, kernel, closure, nucleus or all\n";
        return 2;
      }
      return run_verify(suite, ds, options);
    }
    if (patterns->parsed()) {
      std::cout << hh::cli::patterns_summary(patterns_d, patterns_depth, count_only).dump(2)
                << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hh::resource_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
