#ifndef CYCLIDENT_SWEEP_HPP
#define CYCLIDENT_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cyclident/identities.hpp"
#include "cyclident/report.hpp"

namespace cyclident {

enum class OutputFormat { human, json, csv };

struct RangeSpec {
  std::vector<std::int64_t> values;
  bool all_roots = false;  // root_exp == "all": every admissible exponent
};

// "a", "a,b,c", "lo:hi", "lo:hi:step" or "all" (root_exp only).
RangeSpec parse_range(const std::string& text);

/**
 * A parameter grid for one identity. Hypothesis-violating cells are
 * evaluated anyway and come back inapplicable; they are counted, not
 * errors. Cells run concurrently up to `parallelism` but records are
 * emitted in grid order.
 */
struct SweepSpec {
  std::string identity;
  Mode mode = Mode::exact;
  bool both_modes = false;
  std::map<std::string, RangeSpec> ranges;
  long precision_bits = 192;
  OutputFormat format = OutputFormat::human;
  int parallelism = 1;
  std::uint64_t seed = 1;
  std::size_t samples = 10;  // numeric points per parameter combination
  int max_roots = 8;         // cap when root_exp = all
};

struct SweepSummary {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t inapplicable = 0;
};

// Returns the tally; throws std::invalid_argument for an unusable spec
// (unknown identity, missing required ranges, empty grid).
SweepSummary run_sweep(const SweepSpec& spec, std::ostream& out);

std::string summary_line(const SweepSummary& s, OutputFormat format);

}  // namespace cyclident

#endif
