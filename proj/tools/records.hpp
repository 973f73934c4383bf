#pragma once

// Output records shared by every subcommand: CSV (RFC 4180 style, '\n'
// line endings) or JSON Lines. Numbers use the shortest representation that
// round-trips the binary value, independent of locale.

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace catentropy::cli {

inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

struct output_record {
  std::string quantity;
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
  std::optional<double> oracle_value;
  std::optional<double> abs_diff;

  output_record& with_oracle(double oracle) {
    oracle_value = oracle;
    abs_diff = std::abs(value - oracle);
    return *this;
  }
};

inline nlohmann::json to_json(const output_record& r) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v + 0.0;
  nlohmann::json j{{"quantity", r.quantity}, {"inputs", inputs}, {"value", r.value + 0.0}};
  if (r.oracle_value) {
    j["oracle_value"] = *r.oracle_value + 0.0;
    j["abs_diff"] = *r.abs_diff + 0.0;
  }
  return j;
}

inline output_record record_from_json(const nlohmann::json& j) {
  output_record r;
  r.quantity = j.at("quantity").get<std::string>();
  for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<double>());
  r.value = j.at("value").get<double>();
  if (j.contains("oracle_value")) {
    r.oracle_value = j.at("oracle_value").get<double>();
    r.abs_diff = j.at("abs_diff").get<double>();
  }
  return r;
}

enum class format { csv, json };

class record_writer {
 public:
  record_writer(std::ostream& out, format fmt) : out_(out), fmt_(fmt) {}

  void write(const output_record& r) {
    if (fmt_ == format::json) {
      out_ << to_json(r).dump() << '\n';
      return;
    }
    if (!header_written_) {
      out_ << "quantity,inputs,value,oracle_value,abs_diff\n";
      header_written_ = true;
    }
    std::string inputs;
    for (const auto& [k, v] : r.inputs) {
      if (!inputs.empty()) inputs += ';';
      inputs += k + '=' + format_number(v);
    }
    out_ << r.quantity << ',' << inputs << ',' << format_number(r.value) << ',';
    if (r.oracle_value) out_ << format_number(*r.oracle_value) << ',' << format_number(*r.abs_diff);
    else out_ << ',';
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  format fmt_;
  bool header_written_ = false;
};

}  // namespace catentropy::cli
