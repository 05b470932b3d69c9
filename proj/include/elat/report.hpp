#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace elat {

/// Output of one CLI command. `timing_ms` is kept out of the machine form
/// unless asked for, so that reports are byte-identical across runs.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::optional<double> timing_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

inline nlohmann::ordered_json to_json(const Report& r, bool with_timing = false) {
  nlohmann::ordered_json j{{"command", r.command}, {"inputs", r.inputs}, {"result", r.payload}};
  if (with_timing && r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

inline std::string serialize(const Report& r, bool with_timing = false) {
  return to_json(r, with_timing).dump(2) + "\n";
}

inline Report parse_report(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.payload = j.at("result");
  if (j.contains("timing_ms")) r.timing_ms = j["timing_ms"].get<double>();
  return r;
}

}  // namespace elat
