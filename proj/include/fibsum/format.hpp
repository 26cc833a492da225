#pragma once

/**
 * @file format.hpp
 * @brief Serialisation of solution records and verification reports.
 *
 * JSONL records keep the key order sign, n, m, y, p, value, degenerate, and
 * write y and value as decimal strings. The diagonal family F_n - F_n = 0
 * has null n and m plus a "family": "n=m" key. CSV columns are fixed as
 * sign,n,m,y,p,value,degenerate.
 */

#include "fibsum/search.hpp"
#include "fibsum/verify.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <span>
#include <string>

namespace fibsum {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const SolutionRecord& r) {
  ordered_json j;
  j["sign"] = std::string(1, as_char(r.sign));
  if (r.diagonal_family) {
    j["n"] = nullptr;
    j["m"] = nullptr;
  } else {
    j["n"] = r.n;
    j["m"] = r.m;
  }
  j["y"] = r.y.str();
  j["p"] = r.p;
  j["value"] = r.value.str();
  j["degenerate"] = r.degenerate;
  if (r.diagonal_family) j["family"] = "n=m";
  return j;
}

inline std::string to_csv_row(const SolutionRecord& r) {
  std::string row(1, as_char(r.sign));
  row += ',';
  row += r.diagonal_family ? "n,n" : std::to_string(r.n) + "," + std::to_string(r.m);
  row += "," + r.y.str() + "," + std::to_string(r.p) + "," + r.value.str() + ",";
  row += r.degenerate ? "true" : "false";
  return row;
}

/// Human-oriented rendering, e.g. "F_36 + F_12 = 3864^2 = 14930496".
inline std::string to_table_row(const SolutionRecord& r) {
  const char op = as_char(r.sign);
  if (r.diagonal_family) return std::string("F_n ") + op + " F_n = 0  (every n, every p)";
  std::string row = "F_" + std::to_string(r.n) + " " + op + " F_" + std::to_string(r.m) + " = ";
  if (r.degenerate) return row + r.value.str() + "  (every p)";
  return row + r.y.str() + "^" + std::to_string(r.p) + " = " + r.value.str();
}

inline void write_records(std::ostream& out, std::span<const SolutionRecord> records,
                          OutputFormat format) {
  switch (format) {
    case OutputFormat::jsonl:
      for (const auto& r : records) out << to_json(r).dump() << '\n';
      break;
    case OutputFormat::csv:
      out << "sign,n,m,y,p,value,degenerate\n";
      for (const auto& r : records) out << to_csv_row(r) << '\n';
      break;
    case OutputFormat::table:
      for (const auto& r : records) out << to_table_row(r) << '\n';
      break;
  }
}

inline ordered_json to_json(const Witness& w) {
  ordered_json j = ordered_json::array();
  if (!w.tag.empty()) j.push_back(w.tag);
  for (auto i : w.indices) j.push_back(i);
  return j;
}

inline ordered_json to_json(const VerificationReport& report) {
  auto list = [](const std::vector<Witness>& ws) {
    ordered_json a = ordered_json::array();
    for (const auto& w : ws) a.push_back(to_json(w));
    return a;
  };
  ordered_json j;
  j["theorem_id"] = name_of(report.theorem_id);
  j["bounds"] = report.bounds;
  j["witnesses"] = list(report.witnesses);
  j["expected"] = list(report.expected);
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  ordered_json notes = ordered_json::object();
  for (const auto& [k, v] : report.notes) notes[k] = v;
  j["notes"] = notes;
  if (!report.pass) {
    j["unexpected"] = list(report.unexpected());
    j["missing"] = list(report.missing());
  }
  j["verdict"] = report.pass ? "pass" : "fail";
  return j;
}

}  // namespace fibsum
