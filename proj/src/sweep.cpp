#include "cyclident/sweep.hpp"

#include <atomic>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cyclident/intmath.hpp"

namespace cyclident {

RangeSpec parse_range(const std::string& text) {
  RangeSpec r;
  if (text == "all") {
    r.all_roots = true;
    return r;
  }
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) r.values.push_back(std::stoll(piece));
    return r;
  }
  if (text.find(':') != std::string::npos) {
    std::istringstream is(text);
    std::string piece;
    std::vector<std::int64_t> parts;
    while (std::getline(is, piece, ':')) parts.push_back(std::stoll(piece));
    if (parts.size() < 2 || parts.size() > 3) {
      throw std::invalid_argument("range must be lo:hi or lo:hi:step");
    }
    const std::int64_t step = parts.size() == 3 ? parts[2] : 1;
    if (step <= 0) throw std::invalid_argument("range step must be positive");
    for (std::int64_t v = parts[0]; v <= parts[1]; v += step) {
      r.values.push_back(v);
    }
    return r;
  }
  r.values.push_back(std::stoll(text));
  return r;
}

namespace {

using Cell = std::function<IdentityReport()>;

const RangeSpec& need_range(const SweepSpec& spec, const std::string& name) {
  auto it = spec.ranges.find(name);
  if (it == spec.ranges.end()) {
    throw std::invalid_argument("sweep over '" + spec.identity +
                                "' needs a range for --" + name);
  }
  return it->second;
}

std::vector<std::int64_t> capped(std::vector<std::int64_t> v, int cap) {
  if (cap > 0 && v.size() > static_cast<std::size_t>(cap)) {
    v.resize(static_cast<std::size_t>(cap));
  }
  return v;
}

// Root exponents for one cell: the explicit list, or every admissible
// exponent at this order (capped).
std::vector<std::int64_t> roots_for(const SweepSpec& spec,
                                    const RangeSpec& range,
                                    std::int64_t order, std::int64_t n,
                                    bool order_gated) {
  if (!range.all_roots) return range.values;
  if (order_gated) {
    return capped(admissible_exponents_eq14(n, order), spec.max_roots);
  }
  return capped(primitive_exponents(order), spec.max_roots);
}

// Per-cell sample seed: deterministic in (spec seed, n).
std::uint64_t mix_seed(std::uint64_t seed, std::int64_t n) {
  return seed + static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL;
}

std::vector<MpReal> cell_samples(const SweepSpec& spec, std::int64_t n,
                                 bool theta_domain,
                                 const PrecisionContext& ctx) {
  SamplePlan plan;
  plan.seed = mix_seed(spec.seed, n);
  plan.count = spec.samples;
  plan.lo_pi = Rational(0);
  plan.hi_pi = theta_domain ? Rational(2) : Rational(1);
  plan.two_pi_period = theta_domain;
  for (std::int64_t k = 1; k <= n; ++k) plan.exclusion_ks.push_back(k);
  return draw_samples(plan, ctx);
}

void expand_cells(const SweepSpec& spec, std::vector<Cell>& cells) {
  const PrecisionContext ctx(spec.precision_bits);
  const std::string& id = spec.identity;
  const bool exact = !spec.both_modes && spec.mode == Mode::exact;
  const bool numeric = !spec.both_modes && spec.mode == Mode::numeric;
  const bool want_exact = spec.both_modes || exact;
  const bool want_numeric = spec.both_modes || numeric;

  if (id == "eq11" || id == "eq12" || id == "eq18") {
    for (std::int64_t n : need_range(spec, "n").values) {
      const std::int64_t order =
          id == "eq11" ? 3 * n + 2 : 6 * n + 4;
      for (std::int64_t a :
           roots_for(spec, need_range(spec, "root_exp"), order, n, false)) {
        if (id == "eq11") {
          cells.push_back([n, a] { return verify_eq11(n, a); });
        } else if (id == "eq12") {
          cells.push_back([n, a] { return verify_eq12(n, a); });
        } else {
          cells.push_back([n, a] { return verify_eq18(n, a); });
        }
      }
    }
    return;
  }
  if (id == "eq13") {
    for (std::int64_t m : need_range(spec, "m").values) {
      for (std::int64_t n : need_range(spec, "n").values) {
        for (std::int64_t d : need_range(spec, "delta").values) {
          const std::int64_t order = m * (n - d) - (d == 0 ? 1 : -1);
          if (order < 1) continue;
          for (std::int64_t a : roots_for(spec, need_range(spec, "root_exp"),
                                          order, n, false)) {
            cells.push_back([m, n, d, a] { return verify_eq13(m, n, d, a); });
          }
        }
      }
    }
    return;
  }
  if (id == "eq17") {
    for (std::int64_t l : need_range(spec, "l").values) {
      for (std::int64_t m : need_range(spec, "m").values) {
        for (std::int64_t n : need_range(spec, "n").values) {
          const std::int64_t order = m * n + l;
          for (std::int64_t a : roots_for(spec, need_range(spec, "root_exp"),
                                          order, n, false)) {
            cells.push_back([l, m, n, a] { return verify_eq17(l, m, n, a); });
          }
        }
      }
    }
    return;
  }
  if (id == "eq16" || id == "cor11_expanded") {
    for (std::int64_t n : need_range(spec, "n").values) {
      for (std::int64_t m : need_range(spec, "m").values) {
        if (id == "eq16") {
          cells.push_back([n, m] { return verify_eq16(n, m); });
        } else {
          cells.push_back([n, m] { return verify_cor11_expanded(n, m); });
        }
      }
    }
    return;
  }
  if (id == "lemma21") {
    for (std::int64_t n : need_range(spec, "n").values) {
      cells.push_back([n] { return verify_lemma21(n); });
    }
    return;
  }
  if (id == "eq14") {
    if (want_exact) {
      for (std::int64_t n : need_range(spec, "n").values) {
        for (std::int64_t order : need_range(spec, "order").values) {
          for (std::int64_t a : roots_for(spec, need_range(spec, "root_exp"),
                                          order, n, true)) {
            cells.push_back(
                [n, order, a] { return verify_eq14_exact(n, order, a); });
          }
        }
      }
    }
    if (want_numeric) {
      for (std::int64_t n : need_range(spec, "n").values) {
        for (const MpReal& theta : cell_samples(spec, n, true, ctx)) {
          cells.push_back(
              [n, theta, ctx] { return verify_eq14_numeric(n, theta, ctx); });
        }
      }
    }
    return;
  }
  if (id == "eq15" || id == "eq22") {
    for (std::int64_t n : need_range(spec, "n").values) {
      const bool theta_domain = id == "eq22";
      for (const MpReal& point : cell_samples(spec, n, theta_domain, ctx)) {
        if (id == "eq15") {
          cells.push_back(
              [n, point, ctx] { return verify_eq15(n, point, ctx); });
        } else {
          cells.push_back(
              [n, point, ctx] { return verify_eq22(n, point, ctx); });
        }
      }
    }
    return;
  }
  if (id == "cos_sum" || id == "sine_ratio") {
    const bool is_cos = id == "cos_sum";
    if (want_exact) {
      for (std::int64_t n : need_range(spec, "n").values) {
        for (std::int64_t order : need_range(spec, "order").values) {
          for (std::int64_t a : roots_for(spec, need_range(spec, "root_exp"),
                                          order, n, false)) {
            if (is_cos) {
              cells.push_back(
                  [n, order, a] { return verify_cos_sum_exact(n, order, a); });
            } else {
              cells.push_back([n, order, a] {
                return verify_sine_ratio_exact(n, order, a);
              });
            }
          }
        }
      }
    }
    if (want_numeric) {
      for (std::int64_t n : need_range(spec, "n").values) {
        for (const MpReal& point : cell_samples(spec, n, is_cos, ctx)) {
          if (is_cos) {
            cells.push_back([n, point, ctx] {
              return verify_cos_sum_numeric(n, point, ctx);
            });
          } else {
            cells.push_back([n, point, ctx] {
              return verify_sine_ratio_numeric(n, point, ctx);
            });
          }
        }
      }
    }
    return;
  }
  throw std::invalid_argument("unknown identity id: " + id);
}

}  // namespace

std::string summary_line(const SweepSummary& s, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json:
      os << "{\"total\":" << s.total << ",\"passed\":" << s.passed
         << ",\"failed\":" << s.failed << ",\"inapplicable\":" << s.inapplicable
         << "}";
      break;
    case OutputFormat::csv:
      os << "# total=" << s.total << " passed=" << s.passed
         << " failed=" << s.failed << " inapplicable=" << s.inapplicable;
      break;
    default:
      os << "total=" << s.total << " passed=" << s.passed
         << " failed=" << s.failed << " inapplicable=" << s.inapplicable;
      break;
  }
  return os.str();
}

SweepSummary run_sweep(const SweepSpec& spec, std::ostream& out) {
  if (!is_identity_id(spec.identity)) {
    throw std::invalid_argument("unknown identity id: " + spec.identity);
  }
  std::vector<Cell> cells;
  expand_cells(spec, cells);
  if (cells.empty()) {
    throw std::invalid_argument("sweep grid is empty");
  }

  std::vector<IdentityReport> results(cells.size());
  const int workers =
      std::max(1, std::min<int>(spec.parallelism,
                                static_cast<int>(cells.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = cells[i]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          results[i] = cells[i]();
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SweepSummary summary;
  if (spec.format == OutputFormat::csv) {
    out << csv_header(spec.identity) << "\n";
  }
  for (const auto& rep : results) {
    ++summary.total;
    if (rep.status == Status::pass) ++summary.passed;
    if (rep.status == Status::fail) ++summary.failed;
    if (rep.status == Status::inapplicable) ++summary.inapplicable;
    switch (spec.format) {
      case OutputFormat::json:
        out << report_to_json(rep).dump() << "\n";
        break;
      case OutputFormat::csv:
        out << csv_row(rep) << "\n";
        break;
      default:
        out << report_human_line(rep) << "\n";
        break;
    }
  }
  out << summary_line(summary, spec.format) << "\n";
  return summary;
}

}  // namespace cyclident
