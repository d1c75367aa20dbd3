#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace acx {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::size_t instances = 0;
  std::size_t passed = 0;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> failures;  // first few, in instance order

  bool all_passed() const { return instances > 0 && passed == instances; }
  bool within_limit() const { return seconds < limit_seconds; }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  // Overrides the instance count of the randomized criteria (1-5 and 8).
  std::optional<std::size_t> instances;
  std::vector<int> criteria;  // empty runs all eight
  unsigned threads = 1;
  // Directory with grinta_corpus.json and quasiconcavity_violation.json.
  std::string data_dir;
};

/// Thread count from ACX_SUITE_THREADS, defaulting to 1.
unsigned suite_threads_from_env();

/// Runs the selected acceptance criteria. Instance i of criterion k draws
/// from its own seed derived from (seed, k, i), so results do not depend on
/// the thread count.
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// Deterministic JSON summary; timings are included only when asked for,
/// so that a fixed seed yields byte-identical reports.
nlohmann::json suite_report(const std::vector<CriterionResult>& results,
                            const SuiteOptions& options, bool with_timings);

}  // namespace acx
