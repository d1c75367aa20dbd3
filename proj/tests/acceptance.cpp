#include <cstdio>
#include <cstdlib>

#include "acx/suite.hpp"

// Runs the eight acceptance criteria with the default seed and prints one
// line per criterion. Exits nonzero when any criterion fails or overruns.
int main(int argc, char** argv) {
  acx::SuiteOptions options;
  options.threads = acx::suite_threads_from_env();
  options.data_dir = argc > 1 ? argv[1] : ACX_TEST_DATA_DIR;
  bool all = true;
  for (const auto& r : acx::run_suite(options)) {
    const bool ok = r.all_passed() && r.within_limit();
    all = all && ok;
    std::printf("[%s] criterion %d: %s (%zu/%zu passed, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.passed, r.instances, r.seconds, r.limit_seconds);
    for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
