// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "mpr/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::vector<unsigned> ids;
  mpr::SuiteOptions options;
  bool records = false;
  app.add_option("--criterion,-c", ids, "criteria to run (default: all)")->check(CLI::Range(1u, mpr::kCriterionCount));
  app.add_option("--workers", options.workers, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--stretch", options.stretch, "include PSL(4,2) ~ Alt(8)");
  app.add_flag("--records", records, "also print the detail records as JSONL");
  CLI11_PARSE(app, argc, argv);
  if (ids.empty()) {
    for (unsigned id = 1; id <= mpr::kCriterionCount; ++id) ids.push_back(id);
  }

  bool all = true;
  for (const unsigned id : ids) {
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto r = mpr::run_criterion(id, options);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::printf("%s criterion %2u %-22s checks=%zu failures=%zu %.2fs  %s\n", r.passed ? "PASS" : "FAIL", id,
                  r.name.c_str(), r.checks, r.failures, secs, r.summary.c_str());
      if (records) std::cout << mpr::emit(r.records, mpr::OutputFormat::Jsonl);
      all = all && r.passed;
    } catch (const std::exception& e) {
      std::printf("FAIL criterion %2u %-22s error: %s\n", id, mpr::criterion_name(id), e.what());
      all = false;
    }
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
