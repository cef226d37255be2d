#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "cyclident/identities.hpp"
#include "cyclident/report.hpp"

using namespace cyclident;

TEST_CASE("json schema: keys, order and types") {
  const auto rep = verify_eq14_exact(3, 8, 1);
  const auto j = report_to_json(rep);

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"identity", "params", "mode",
                                         "expected", "computed_real",
                                         "computed_imag", "residual", "status",
                                         "micros"});
  CHECK(j["identity"] == "eq14");
  CHECK(j["params"]["n"] == 3);
  CHECK(j["params"]["order"] == 8);
  CHECK(j["mode"] == "exact");
  CHECK(j["expected"] == "-1");
  CHECK(j["computed_real"] == "-1");
  CHECK(j["computed_imag"].is_null());
  CHECK(j["residual"].is_null());
  CHECK(j["status"] == "pass");
  CHECK(j["micros"].is_number_integer());
}

TEST_CASE("json round-trips byte-identically") {
  for (const auto& rep :
       {verify_eq14_exact(3, 8, 1), verify_eq18(0, 1), verify_lemma21(2),
        verify_eq15(5, MpReal::from_string("0.7", 192), PrecisionContext(192)),
        verify_eq14_exact(3, 3, 1)}) {
    const std::string text = report_to_json(rep).dump();
    const auto parsed = nlohmann::ordered_json::parse(text);
    CHECK(parsed.dump() == text);
  }
}

TEST_CASE("numeric-mode json carries decimal strings") {
  const auto rep =
      verify_eq15(5, MpReal::from_string("0.7", 192), PrecisionContext(192));
  const auto j = report_to_json(rep);
  CHECK(j["mode"] == "numeric");
  CHECK(j["params"]["precision_bits"] == 192);
  CHECK(j["params"]["x"].is_string());
  CHECK(j["params"]["tolerance"].is_string());
  CHECK(j["residual"].is_string());
  CHECK(j["expected"] == "-2");

  // pass in numeric mode means exactly: residual <= the recorded tolerance
  const MpReal residual =
      MpReal::from_string(j["residual"].get<std::string>(), 256);
  const MpReal tol = MpReal::from_string(
      j["params"]["tolerance"].get<std::string>(), 256);
  CHECK((rep.status == Status::pass) == (residual <= tol));
}

TEST_CASE("csv header and row shape") {
  CHECK(csv_header("eq14") ==
        "identity_id,n,order,root_exp,theta,precision_bits,tolerance,mode,"
        "expected,computed_real,computed_imag,residual,status,micros");
  CHECK(csv_header("eq16") ==
        "identity_id,n,m,mode,expected,computed_real,computed_imag,residual,"
        "status,micros");

  const auto rep = verify_eq14_exact(3, 8, 1);
  const std::string row = csv_row(rep);
  const auto count_commas = [](const std::string& s) {
    return std::count(s.begin(), s.end(), ',');
  };
  CHECK(count_commas(row) == count_commas(csv_header("eq14")));
  CHECK(row.substr(0, 7) == "eq14,3,");

  CHECK_THROWS(csv_header("nonsense"));
}

TEST_CASE("rational values serialize as p/q strings") {
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(5).str() == "5");
  CHECK(param_to_string(ParamValue(Rational(7, 3))) == "7/3");
  CHECK(param_to_string(ParamValue(std::int64_t{-4})) == "-4");
}

TEST_CASE("identity id registry") {
  CHECK(identity_ids().size() == 13);
  CHECK(is_identity_id("lemma21"));
  CHECK(is_identity_id("cor11_expanded"));
  CHECK_FALSE(is_identity_id("eq19"));
}

TEST_CASE("human line carries status and note") {
  auto rep = verify_eq14_exact(3, 3, 1);
  const std::string line = report_human_line(rep);
  CHECK(line.find("status=inapplicable") != std::string::npos);
  CHECK(line.find("root order must exceed n") != std::string::npos);
}
