// Drives the built binary end to end; expects its path as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + g_binary + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(run("verify eq14 --n 3 --order 8 --root-exp 1 --mode exact").exit_code == 0);
  CHECK(run("verify eq16 --n 5 --m 1").exit_code == 0);
  CHECK(run("verify eq14 --n 3 --order 3 --root-exp 1").exit_code == 2);
  CHECK(run("verify eq99 --n 1").exit_code == 2);
  CHECK(run("verify eq16 --n 5").exit_code == 2);          // missing --m
  CHECK(run("verify eq16 --n 5 --m banana").exit_code == 2);
  CHECK(run("verify lemma21 --n 2").exit_code == 1);       // counterexample
  CHECK(run("verify lemma21 --n 7").exit_code == 0);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("verify json output is schema-stable and round-trips") {
  const auto r = run("verify eq18 --n 0 --root-exp 1 --format json");
  CHECK(r.exit_code == 0);
  const auto report_lines = lines_of(r.out);
  REQUIRE(report_lines.size() == 1);
  const auto j = nlohmann::ordered_json::parse(report_lines[0]);
  CHECK(j["identity"] == "eq18");
  CHECK(j["status"] == "pass");
  CHECK(j["computed_real"] == "-1/2");
  CHECK(j["computed_imag"] == "1/2");
  CHECK(j.dump() == report_lines[0]);
}

TEST_CASE("verify numeric mode via flags") {
  CHECK(run("verify eq14 --n 7 --theta 1.0 --mode numeric").exit_code == 0);
  CHECK(run("verify eq15 --n 5 --x 0.7").exit_code == 0);
  CHECK(run("verify eq22 --n 5 --theta 1.3").exit_code == 0);
  CHECK(run("verify cos_sum --n 3 --order 5 --root-exp 1").exit_code == 0);
  CHECK(run("verify sine_ratio --n 3 --order 7 --root-exp 1 --mode exact").exit_code == 0);
  // eq16 has no numeric mode
  CHECK(run("verify eq16 --n 5 --m 1 --mode numeric").exit_code == 2);
}

TEST_CASE("precision env var is honored and the flag wins") {
  const auto from_env = run("verify eq15 --n 5 --x 0.7 --format json",
                            "CYCLIDENT_PRECISION_BITS=256 ");
  CHECK(from_env.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(lines_of(from_env.out)[0]);
  CHECK(j["params"]["precision_bits"] == 256);

  const auto flag_wins =
      run("verify eq15 --n 5 --x 0.7 --precision-bits 128 --format json",
          "CYCLIDENT_PRECISION_BITS=256 ");
  CHECK(flag_wins.exit_code == 0);
  j = nlohmann::ordered_json::parse(lines_of(flag_wins.out)[0]);
  CHECK(j["params"]["precision_bits"] == 128);
}

TEST_CASE("sweep csv output") {
  const auto r = run("sweep eq16 --n 1:9:2 --m 1:3 --format csv");
  CHECK(r.exit_code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 1 + 15 + 1);  // header, 5*3 records, summary
  CHECK(ls[0] ==
        "identity_id,n,m,mode,expected,computed_real,computed_imag,residual,"
        "status,micros");
  CHECK(ls[1].substr(0, 10) == "eq16,1,1,e");
  CHECK(ls.back().substr(0, 1) == "#");
  CHECK(ls.back().find("passed=15") != std::string::npos);
  CHECK(ls.back().find("failed=0") != std::string::npos);
}

TEST_CASE("sweep json summary and deterministic order under parallelism") {
  const auto seq = run("sweep eq18 --n 0:3 --root-exp all --format json");
  CHECK(seq.exit_code == 0);
  const auto par =
      run("sweep eq18 --n 0:3 --root-exp all --format json --parallelism 4");
  CHECK(par.exit_code == 0);

  const auto a = lines_of(seq.out);
  const auto b = lines_of(par.out);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    auto ja = nlohmann::ordered_json::parse(a[i]);
    auto jb = nlohmann::ordered_json::parse(b[i]);
    CHECK(ja["identity"] == jb["identity"]);
    CHECK(ja["params"] == jb["params"]);
    CHECK(ja["status"] == jb["status"]);
    CHECK(ja["computed_real"] == jb["computed_real"]);
  }
  const auto summary = nlohmann::ordered_json::parse(a.back());
  CHECK(summary["failed"] == 0);
  CHECK(summary["total"] == summary["passed"]);
}

TEST_CASE("sweep skips inapplicable combinations without failing") {
  // orders 4..6 with n=3: order 4 admits no admissible exponent at all,
  // and the grid mixes passes with inapplicable cells
  const auto r = run("sweep eq14 --n 3 --order 5:8 --root-exp 1:4 --format json");
  CHECK(r.exit_code == 0);
  const auto summary =
      nlohmann::ordered_json::parse(lines_of(r.out).back());
  CHECK(summary["failed"] == 0);
  CHECK(summary["inapplicable"].get<int>() > 0);
  CHECK(summary["passed"].get<int>() > 0);
}

TEST_CASE("sweep rejects an empty grid") {
  CHECK(run("sweep eq16 --m 1:3").exit_code == 2);     // no n range
  CHECK(run("sweep eq16 --n 3:1 --m 1").exit_code == 2);
}

TEST_CASE("sweep validates the mode against the identity") {
  CHECK(run("sweep eq15 --n 1:5:2 --mode exact").exit_code == 2);
  CHECK(run("sweep eq16 --n 1:5:2 --m 1 --mode numeric").exit_code == 2);
}

TEST_CASE("sweep lemma21 over odd n passes") {
  const auto r = run("sweep lemma21 --n 1:49:2");
  CHECK(r.exit_code == 0);
  // and the documented even-n counterexamples fail the sweep
  CHECK(run("sweep lemma21 --n 1:10").exit_code == 1);
}

int selftest_criterion_exit(int criterion) {
  return run("selftest --criterion " + std::to_string(criterion)).exit_code;
}

TEST_CASE("selftest single criteria round-trip through the CLI") {
  CHECK(selftest_criterion_exit(3) == 1);  // even-n counterexamples
  CHECK(selftest_criterion_exit(6) == 0);
  const auto json_run = run("selftest --criterion 6 --json");
  CHECK(json_run.exit_code == 0);
  const auto arr = nlohmann::ordered_json::parse(lines_of(json_run.out)[0]);
  REQUIRE(arr.is_array());
  CHECK(arr[0]["criterion"] == 6);
  CHECK(arr[0]["status"] == "pass");
}

int main(int argc, char** argv) {
  doctest::Context context;
  for (int i = 1; i < argc; ++i) {
    if (argv[i][0] != '-') {
      g_binary = argv[i];
    }
  }
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-cyclident-binary>\n");
    return 1;
  }
  context.applyCommandLine(1, argv);
  return context.run();
}
