#include "cyclident/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cyclident {

const char* to_string(Mode m) {
  return m == Mode::exact ? "exact" : "numeric";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    default:
      return "inapplicable";
  }
}

std::string param_to_string(const ParamValue& v) {
  if (std::holds_alternative<std::int64_t>(v)) {
    return std::to_string(std::get<std::int64_t>(v));
  }
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).str();
  return std::get<std::string>(v);
}

nlohmann::ordered_json report_to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params) {
    if (std::holds_alternative<std::int64_t>(value)) {
      params[name] = std::get<std::int64_t>(value);
    } else {
      params[name] = param_to_string(value);
    }
  }
  j["params"] = std::move(params);
  j["mode"] = to_string(r.mode);
  j["expected"] = r.expected.str();
  j["computed_real"] = r.computed_real;
  if (r.computed_imag) {
    j["computed_imag"] = *r.computed_imag;
  } else {
    j["computed_imag"] = nullptr;
  }
  if (r.residual) {
    j["residual"] = *r.residual;
  } else {
    j["residual"] = nullptr;
  }
  j["status"] = to_string(r.status);
  j["micros"] = r.micros;
  return j;
}

std::string report_human_line(const IdentityReport& r) {
  std::ostringstream os;
  os << r.identity;
  for (const auto& [name, value] : r.params) {
    os << " " << name << "=" << param_to_string(value);
  }
  os << " mode=" << to_string(r.mode);
  os << " expected=" << r.expected.str();
  if (!r.computed_real.empty()) os << " computed=" << r.computed_real;
  if (r.computed_imag) os << " imag=" << *r.computed_imag;
  if (r.residual) os << " residual=" << *r.residual;
  os << " status=" << to_string(r.status);
  if (!r.note.empty()) os << " [" << r.note << "]";
  os << " (" << r.micros << " us)";
  return os.str();
}

namespace {

const std::map<std::string, std::vector<std::string>>& param_columns_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"eq11", {"n", "root_exp"}},
      {"eq12", {"n", "root_exp"}},
      {"eq13", {"m", "n", "delta", "root_exp"}},
      {"eq14", {"n", "order", "root_exp", "theta", "precision_bits", "tolerance"}},
      {"eq15", {"n", "x", "precision_bits", "tolerance"}},
      {"eq16", {"n", "m"}},
      {"eq17", {"l", "m", "n", "root_exp"}},
      {"eq18", {"n", "root_exp"}},
      {"lemma21", {"n"}},
      {"eq22", {"n", "theta", "precision_bits", "tolerance"}},
      {"cos_sum",
       {"n", "order", "root_exp", "theta", "precision_bits", "tolerance"}},
      {"sine_ratio",
       {"n", "order", "root_exp", "x", "precision_bits", "tolerance"}},
      {"cor11_expanded", {"n", "m"}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "eq11",    "eq12", "eq13",    "eq14",       "eq15",
      "eq16",    "eq17", "eq18",    "lemma21",    "eq22",
      "cos_sum", "sine_ratio", "cor11_expanded",
  };
  return ids;
}

bool is_identity_id(const std::string& id) {
  const auto& ids = identity_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

const std::vector<std::string>& csv_param_columns(const std::string& identity_id) {
  auto it = param_columns_table().find(identity_id);
  if (it == param_columns_table().end()) {
    throw std::invalid_argument("unknown identity id: " + identity_id);
  }
  return it->second;
}

std::string csv_header(const std::string& identity_id) {
  std::ostringstream os;
  os << "identity_id";
  for (const auto& col : csv_param_columns(identity_id)) os << "," << col;
  os << ",mode,expected,computed_real,computed_imag,residual,status,micros";
  return os.str();
}

std::string csv_row(const IdentityReport& r) {
  std::ostringstream os;
  os << r.identity;
  for (const auto& col : csv_param_columns(r.identity)) {
    os << ",";
    for (const auto& [name, value] : r.params) {
      if (name == col) {
        os << param_to_string(value);
        break;
      }
    }
  }
  os << "," << to_string(r.mode) << "," << r.expected.str() << ","
     << r.computed_real << "," << (r.computed_imag ? *r.computed_imag : "")
     << "," << (r.residual ? *r.residual : "") << "," << to_string(r.status)
     << "," << r.micros;
  return os.str();
}

}  // namespace cyclident
