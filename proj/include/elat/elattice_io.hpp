#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "elattice.hpp"
#include "errors.hpp"

namespace elat {

// File format (JSON):
//   { "size": n, "eps": [n ints], "meet": [n rows of n ints],
//     "join": [n rows of n ints], "labels": [n strings] (optional) }

inline nlohmann::ordered_json elattice_to_json(const ELattice& l) {
  const std::size_t n = l.size();
  auto rows = [n](const std::vector<Index>& t) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < n; ++a)
      out.push_back(std::vector<Index>(t.begin() + static_cast<std::ptrdiff_t>(a * n),
                                       t.begin() + static_cast<std::ptrdiff_t>((a + 1) * n)));
    return out;
  };
  nlohmann::ordered_json j{{"size", n}, {"eps", l.eps_table()}, {"meet", rows(l.meet_table())},
                           {"join", rows(l.join_table())}};
  if (!l.labels().empty()) j["labels"] = l.labels();
  return j;
}

/// Pretty form with one table row per line.
inline std::string write_elattice(const ELattice& l) {
  const auto j = elattice_to_json(l);
  std::ostringstream os;
  os << "{\n  \"size\": " << l.size() << ",\n  \"eps\": " << j["eps"].dump() << ",\n";
  for (const char* key : {"meet", "join"}) {
    os << "  \"" << key << "\": [\n";
    const auto& rows = j[key];
    for (std::size_t a = 0; a < rows.size(); ++a)
      os << "    " << rows[a].dump() << (a + 1 < rows.size() ? ",\n" : "\n");
    os << "  ]" << (key[0] == 'm' || j.contains("labels") ? ",\n" : "\n");
  }
  if (j.contains("labels")) os << "  \"labels\": " << j["labels"].dump() << "\n";
  os << "}\n";
  return os.str();
}

namespace detail {

inline std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k)
    if (text[k] == '\n') ++line;
  return line;
}

/// Line of the first occurrence of `"key"`, for field diagnostics.
inline std::size_t line_of_key(const std::string& text, const std::string& key) {
  const auto at = text.find('"' + key + '"');
  return at == std::string::npos ? 1 : line_of_offset(text, at);
}

/// Line of row `row` of the table under `key` (its opening bracket).
inline std::size_t line_of_row(const std::string& text, const std::string& key, std::size_t row) {
  auto at = text.find('"' + key + '"');
  if (at == std::string::npos) return 1;
  at = text.find('[', at);
  std::size_t depth = 0, seen = 0;
  for (std::size_t k = at; k < text.size(); ++k) {
    if (text[k] == '[' && ++depth == 2 && seen++ == row) return line_of_offset(text, k);
    if (text[k] == ']' && --depth == 0) break;
  }
  return line_of_key(text, key);
}

}  // namespace detail

/// Parses the file format above. Errors are ParseError with the line in
/// `position()` and the offending field (e.g. `join[2][1]`) in `field()`.
inline ELattice read_elattice(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t line = detail::line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")", line, "");
  }
  auto fail = [&](const std::string& key, const std::string& field, const std::string& msg,
                  std::size_t row = static_cast<std::size_t>(-1)) {
    const std::size_t line =
        row == static_cast<std::size_t>(-1) ? detail::line_of_key(text, key) : detail::line_of_row(text, key, row);
    throw ParseError("line " + std::to_string(line) + ", field '" + field + "': " + msg, line, field);
  };
  if (!j.is_object()) throw ParseError("line 1: top level must be an object", 1, "");
  for (const char* key : {"size", "eps", "meet", "join"})
    if (!j.contains(key)) fail(key, key, "missing");
  if (!j["size"].is_number_unsigned() || j["size"].get<std::size_t>() == 0)
    fail("size", "size", "must be a positive integer");
  const std::size_t n = j["size"].get<std::size_t>();
  if (n > 4096) fail("size", "size", "carrier too large");

  auto entry = [&](const nlohmann::json& v, const std::string& key, const std::string& field,
                   std::size_t row = static_cast<std::size_t>(-1)) {
    if (!v.is_number_unsigned()) fail(key, field, "must be a non-negative integer", row);
    const auto x = v.get<std::size_t>();
    if (x >= n)
      fail(key, field, "value " + std::to_string(x) + " out of range [0, " + std::to_string(n) + ")", row);
    return static_cast<Index>(x);
  };

  const auto& e = j["eps"];
  if (!e.is_array() || e.size() != n) fail("eps", "eps", "must be an array of length " + std::to_string(n));
  std::vector<Index> eps;
  for (std::size_t a = 0; a < n; ++a) eps.push_back(entry(e[a], "eps", "eps[" + std::to_string(a) + "]"));

  auto table = [&](const std::string& key) {
    const auto& t = j[key];
    if (!t.is_array() || t.size() != n) fail(key, key, "must be an array of " + std::to_string(n) + " rows");
    std::vector<Index> out;
    for (std::size_t a = 0; a < n; ++a) {
      const std::string row = key + "[" + std::to_string(a) + "]";
      if (!t[a].is_array() || t[a].size() != n) fail(key, row, "must be a row of length " + std::to_string(n), a);
      for (std::size_t b = 0; b < n; ++b)
        out.push_back(entry(t[a][b], key, row + "[" + std::to_string(b) + "]", a));
    }
    return out;
  };
  auto meet = table("meet");
  auto join = table("join");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    if (!l.is_array() || l.size() != n) fail("labels", "labels", "must be an array of length " + std::to_string(n));
    for (std::size_t a = 0; a < n; ++a) {
      if (!l[a].is_string()) fail("labels", "labels[" + std::to_string(a) + "]", "must be a string");
      labels.push_back(l[a].get<std::string>());
    }
  }
  return ELattice(n, std::move(eps), std::move(meet), std::move(join), std::move(labels));
}

inline ELattice load_elattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_elattice(ss.str());
}

}  // namespace elat
