#ifndef CYCLIDENT_REPORT_HPP
#define CYCLIDENT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cyclident/rational.hpp"

namespace cyclident {

enum class Mode { exact, numeric };
enum class Status { pass, fail, inapplicable };

const char* to_string(Mode m);
const char* to_string(Status s);

// Integer parameters serialize as JSON numbers, rationals as "p/q"
// strings, multiprecision points as decimal strings.
using ParamValue = std::variant<std::int64_t, Rational, std::string>;

std::string param_to_string(const ParamValue& v);

/**
 * One verification outcome. In exact mode `pass` means exact rational
 * equality with `expected`; in numeric mode it means the residual is
 * within the tolerance recorded alongside the parameters.
 */
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, ParamValue>> params;
  Mode mode = Mode::exact;
  Rational expected = Rational(0);
  std::string computed_real;
  std::optional<std::string> computed_imag;
  Status status = Status::inapplicable;
  std::optional<std::string> residual;
  std::int64_t micros = 0;
  std::string note;  // diagnostics for the human format; not part of the schema

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }
};

// Stable schema, stable key order:
// {identity, params, mode, expected, computed_real, computed_imag,
//  residual, status, micros}
nlohmann::ordered_json report_to_json(const IdentityReport& r);

std::string report_human_line(const IdentityReport& r);

// Fixed per-identity parameter column order for CSV output.
const std::vector<std::string>& csv_param_columns(const std::string& identity_id);
std::string csv_header(const std::string& identity_id);
std::string csv_row(const IdentityReport& r);

// All identity ids, in report/catalog order.
const std::vector<std::string>& identity_ids();
bool is_identity_id(const std::string& id);

}  // namespace cyclident

#endif
