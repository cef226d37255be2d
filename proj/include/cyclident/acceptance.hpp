#ifndef CYCLIDENT_ACCEPTANCE_HPP
#define CYCLIDENT_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclident {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::int64_t checks = 0;
  std::int64_t failed = 0;
  std::int64_t inapplicable = 0;
  double seconds = 0.0;
  std::string detail;  // witnesses on failure, empty otherwise

  bool passed() const { return checks > 0 && failed == 0; }
};

// Runs criterion `only` (1..10), or all of them when only == 0.
// Progress lines go to *progress when given.
std::vector<CriterionResult> run_acceptance(int only = 0,
                                            std::ostream* progress = nullptr);

std::string scorecard_line(const CriterionResult& r);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace cyclident

#endif
