// Acceptance suite runner: one pass/fail line per criterion.
// With --criterion K only that criterion runs (used by ctest to report
// the ten criteria individually). Exit 0 iff everything run passed.
#include <cstring>
#include <iostream>
#include <string>

#include "cyclident/acceptance.hpp"

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
      ++i;
    }
  }
  const auto results = cyclident::run_acceptance(only, &std::cout);
  if (results.empty()) {
    std::cerr << "no criteria selected\n";
    return 2;
  }
  std::int64_t checks = 0, failed = 0;
  for (const auto& r : results) {
    checks += r.checks;
    failed += r.failed;
  }
  const bool ok = cyclident::all_passed(results);
  std::cout << (ok ? "ACCEPTANCE OK" : "ACCEPTANCE FAILURES") << ": "
            << results.size() << " criteria, " << checks << " checks, "
            << failed << " failed" << std::endl;
  return ok ? 0 : 1;
}
