#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclident/acceptance.hpp"
#include "cyclident/identities.hpp"
#include "cyclident/report.hpp"
#include "cyclident/sweep.hpp"

namespace {

using namespace cyclident;

struct VerifyArgs {
  std::string identity;
  std::optional<std::int64_t> n, m, l, delta, order, root_exp;
  std::string theta, x;
  std::string mode = "auto";
  long precision_bits = 192;
  std::string format = "human";
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) {
    throw CLI::ValidationError(std::string("missing required parameter --") +
                               flag);
  }
  return *v;
}

const std::string& need_str(const std::string& v, const char* flag) {
  if (v.empty()) {
    throw CLI::ValidationError(std::string("missing required parameter --") +
                               flag);
  }
  return v;
}

bool exact_supported(const std::string& id) {
  return id != "eq15" && id != "eq22";
}

bool numeric_supported(const std::string& id) {
  return id == "eq14" || id == "eq15" || id == "eq22" || id == "cos_sum" ||
         id == "sine_ratio";
}

IdentityReport run_verify(const VerifyArgs& a) {
  const std::string& id = a.identity;
  if (!is_identity_id(id)) {
    throw CLI::ValidationError("unknown identity id: " + id);
  }
  std::string mode = a.mode;
  if (mode == "auto") mode = exact_supported(id) ? "exact" : "numeric";
  if (mode == "exact" && !exact_supported(id)) {
    throw CLI::ValidationError(id + " has no exact mode");
  }
  if (mode == "numeric" && !numeric_supported(id)) {
    throw CLI::ValidationError(id + " has no numeric mode");
  }

  const PrecisionContext ctx(a.precision_bits);
  if (id == "eq11") return verify_eq11(need(a.n, "n"), need(a.root_exp, "root-exp"));
  if (id == "eq12") return verify_eq12(need(a.n, "n"), need(a.root_exp, "root-exp"));
  if (id == "eq13") {
    return verify_eq13(need(a.m, "m"), need(a.n, "n"), need(a.delta, "delta"),
                       need(a.root_exp, "root-exp"));
  }
  if (id == "eq14") {
    if (mode == "exact") {
      return verify_eq14_exact(need(a.n, "n"), need(a.order, "order"),
                               need(a.root_exp, "root-exp"));
    }
    return verify_eq14_numeric(
        need(a.n, "n"),
        MpReal::from_string(need_str(a.theta, "theta"), ctx.precision_bits),
        ctx);
  }
  if (id == "eq15") {
    return verify_eq15(
        need(a.n, "n"),
        MpReal::from_string(need_str(a.x, "x"), ctx.precision_bits), ctx);
  }
  if (id == "eq16") return verify_eq16(need(a.n, "n"), need(a.m, "m"));
  if (id == "eq17") {
    return verify_eq17(need(a.l, "l"), need(a.m, "m"), need(a.n, "n"),
                       need(a.root_exp, "root-exp"));
  }
  if (id == "eq18") return verify_eq18(need(a.n, "n"), need(a.root_exp, "root-exp"));
  if (id == "lemma21") return verify_lemma21(need(a.n, "n"));
  if (id == "eq22") {
    return verify_eq22(
        need(a.n, "n"),
        MpReal::from_string(need_str(a.theta, "theta"), ctx.precision_bits),
        ctx);
  }
  if (id == "cos_sum") {
    if (mode == "exact") {
      return verify_cos_sum_exact(need(a.n, "n"), need(a.order, "order"),
                                  need(a.root_exp, "root-exp"));
    }
    return verify_cos_sum_numeric(
        need(a.n, "n"),
        MpReal::from_string(need_str(a.theta, "theta"), ctx.precision_bits),
        ctx);
  }
  if (id == "sine_ratio") {
    if (mode == "exact") {
      return verify_sine_ratio_exact(need(a.n, "n"), need(a.order, "order"),
                                     need(a.root_exp, "root-exp"));
    }
    return verify_sine_ratio_numeric(
        need(a.n, "n"),
        MpReal::from_string(need_str(a.x, "x"), ctx.precision_bits), ctx);
  }
  return verify_cor11_expanded(need(a.n, "n"), need(a.m, "m"));
}

void print_report(const IdentityReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << report_to_json(rep).dump() << "\n";
  } else if (format == "csv") {
    std::cout << csv_header(rep.identity) << "\n" << csv_row(rep) << "\n";
  } else {
    std::cout << report_human_line(rep) << "\n";
  }
}

OutputFormat parse_format(const std::string& f) {
  if (f == "json") return OutputFormat::json;
  if (f == "csv") return OutputFormat::csv;
  return OutputFormat::human;
}

void add_range_option(CLI::App* cmd, std::map<std::string, std::string>& into,
                      const std::string& flag, const std::string& help) {
  cmd->add_option("--" + flag, into[flag], help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cyclident: exact and multiprecision verification of root-of-unity,\n"
      "cotangent and Bernoulli-polynomial identities over swept grids"};
  app.require_subcommand(1);

  // ---- verify ----
  VerifyArgs va;
  CLI::App* verify = app.add_subcommand(
      "verify", "run one verification and print its report");
  verify->add_option("identity", va.identity,
                     "identity id (eq11..eq18, lemma21, eq22, cos_sum, "
                     "sine_ratio, cor11_expanded)")
      ->required();
  verify->add_option("--n", va.n, "parameter n");
  verify->add_option("--m", va.m, "parameter m");
  verify->add_option("--l", va.l, "parameter l");
  verify->add_option("--delta", va.delta, "parameter delta (0 or 1)");
  verify->add_option("--order", va.order, "root-of-unity order N");
  verify->add_option("--root-exp", va.root_exp,
                     "root exponent a (the root is zeta_N^a)");
  verify->add_option("--theta", va.theta, "angle theta (decimal)");
  verify->add_option("--x", va.x, "real point x (decimal)");
  verify->add_option("--mode", va.mode, "exact|numeric (default: per identity)")
      ->check(CLI::IsMember({"auto", "exact", "numeric"}));
  verify
      ->add_option("--precision-bits", va.precision_bits,
                   "working precision for numeric mode")
      ->envname("CYCLIDENT_PRECISION_BITS")
      ->check(CLI::Range(64L, 1L << 20));
  verify->add_option("--format", va.format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  // ---- sweep ----
  std::string sweep_identity, sweep_mode = "auto", sweep_format = "human";
  std::map<std::string, std::string> range_texts;
  long sweep_precision = 192;
  int sweep_parallelism = 1, sweep_max_roots = 8;
  std::uint64_t sweep_seed = 1;
  std::size_t sweep_samples = 10;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "verify a grid of parameter combinations");
  sweep->add_option("identity", sweep_identity, "identity id")->required();
  add_range_option(sweep, range_texts, "n", "range for n (a, a:b, a:b:c or list)");
  add_range_option(sweep, range_texts, "m", "range for m");
  add_range_option(sweep, range_texts, "l", "range for l");
  add_range_option(sweep, range_texts, "delta", "range for delta");
  add_range_option(sweep, range_texts, "order", "range for the order N");
  sweep->add_option("--root-exp", range_texts["root_exp"],
                    "range for a, or 'all' for every admissible exponent");
  sweep->add_option("--max-roots", sweep_max_roots,
                    "cap per order when --root-exp all");
  sweep->add_option("--samples", sweep_samples,
                    "numeric sample points per combination");
  sweep->add_option("--seed", sweep_seed, "sample seed");
  sweep->add_option("--mode", sweep_mode, "exact|numeric|both")
      ->check(CLI::IsMember({"auto", "exact", "numeric", "both"}));
  sweep
      ->add_option("--precision-bits", sweep_precision,
                   "working precision for numeric mode")
      ->envname("CYCLIDENT_PRECISION_BITS")
      ->check(CLI::Range(64L, 1L << 20));
  sweep->add_option("--format", sweep_format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  sweep->add_option("--parallelism", sweep_parallelism,
                    "worker threads for grid cells")
      ->check(CLI::PositiveNumber);

  // ---- selftest ----
  bool selftest_json = false;
  int selftest_criterion = 0;
  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the embedded acceptance suite");
  selftest->add_flag("--json", selftest_json, "machine-readable scorecard");
  selftest->add_option("--criterion", selftest_criterion,
                       "run a single criterion (1..10)")
      ->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      IdentityReport rep = run_verify(va);
      print_report(rep, va.format);
      switch (rep.status) {
        case Status::pass:
          return 0;
        case Status::fail:
          return 1;
        default:
          return 2;
      }
    }
    if (*sweep) {
      SweepSpec spec;
      spec.identity = sweep_identity;
      if (sweep_mode == "exact" && !exact_supported(sweep_identity)) {
        throw CLI::ValidationError(sweep_identity + " has no exact mode");
      }
      if (sweep_mode == "numeric" && !numeric_supported(sweep_identity)) {
        throw CLI::ValidationError(sweep_identity + " has no numeric mode");
      }
      if (sweep_mode == "both") {
        spec.both_modes = true;
      } else if (sweep_mode == "numeric") {
        spec.mode = Mode::numeric;
      } else if (sweep_mode == "auto") {
        spec.mode = exact_supported(sweep_identity) ? Mode::exact : Mode::numeric;
      }
      for (const auto& [name, text] : range_texts) {
        if (!text.empty()) spec.ranges[name] = parse_range(text);
      }
      spec.precision_bits = sweep_precision;
      spec.format = parse_format(sweep_format);
      spec.parallelism = sweep_parallelism;
      spec.seed = sweep_seed;
      spec.samples = sweep_samples;
      spec.max_roots = sweep_max_roots;
      const SweepSummary summary = run_sweep(spec, std::cout);
      return summary.failed == 0 ? 0 : 1;
    }
    if (*selftest) {
      if (selftest_json) {
        auto results = run_acceptance(selftest_criterion, nullptr);
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& r : results) {
          nlohmann::ordered_json j;
          j["criterion"] = r.id;
          j["title"] = r.title;
          j["checks"] = r.checks;
          j["failed"] = r.failed;
          j["inapplicable"] = r.inapplicable;
          j["seconds"] = r.seconds;
          j["status"] = r.passed() ? "pass" : "fail";
          j["detail"] = r.detail;
          out.push_back(std::move(j));
        }
        std::cout << out.dump() << "\n";
        return all_passed(results) ? 0 : 1;
      }
      auto results = run_acceptance(selftest_criterion, &std::cout);
      std::int64_t checks = 0, failed = 0;
      for (const auto& r : results) {
        checks += r.checks;
        failed += r.failed;
      }
      const bool ok = all_passed(results);
      std::cout << (ok ? "OK" : "FAILURES") << ": " << results.size()
                << " criteria, " << checks << " checks, " << failed
                << " failed\n";
      return ok ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SampleExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
