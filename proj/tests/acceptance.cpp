// Runs acceptance criteria and prints one PASS/FAIL line per criterion.
// Exits nonzero if any selected criterion fails.

#include "verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
  CLI::App cli{"lunezeta acceptance criteria"};
  std::vector<int> ids;
  lunezeta::app::VerifyOptions opts;
  cli.add_option("--criterion", ids, "criterion id, repeatable (default: all)")
      ->check(CLI::Range(1, lunezeta::app::kCriterionCount));
  cli.add_option("--figure-csv", opts.figure_csv, "where criterion 16 writes its sweep");
  cli.add_option("--inject-det-eps", opts.det_target_eps);
  CLI11_PARSE(cli, argc, argv);
  if (ids.empty()) ids = lunezeta::app::all_criteria();

  bool ok = true;
  for (int id : ids) {
    const auto r = lunezeta::app::run_criterion(id, opts);
    std::cout << lunezeta::app::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
