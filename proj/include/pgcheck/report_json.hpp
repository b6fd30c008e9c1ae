#pragma once

// Canonical JSON form of check reports.  Field order is fixed, timing is
// runtime metadata and deliberately excluded, so identical inputs (and seeds)
// produce byte-identical documents.  Schema: docs/report.schema.json.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "pgcheck/report.hpp"

namespace pgcheck {

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::ordered_json report_to_json_node(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["status"] = status_name(r.status);
  if (r.residual_witness.has_value()) j["witness"] = *r.residual_witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.sub_reports.empty()) {
    nlohmann::ordered_json children = nlohmann::ordered_json::array();
    for (const CheckReport& c : r.sub_reports) children.push_back(report_to_json_node(c));
    j["checks"] = std::move(children);
  }
  return j;
}

inline std::string to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["report"] = report_to_json_node(r);
  return j.dump(2) + "\n";
}

inline CheckReport report_from_json_node(const nlohmann::json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  auto st = status_from_name(j.at("status").get<std::string>());
  if (!st) throw std::runtime_error("report: unknown status");
  r.status = *st;
  if (j.contains("witness")) r.residual_witness = j.at("witness").get<std::string>();
  if (j.contains("detail")) r.detail = j.at("detail").get<std::string>();
  if (j.contains("checks"))
    for (const auto& c : j.at("checks")) r.sub_reports.push_back(report_from_json_node(c));
  return r;
}

inline CheckReport report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != kReportSchemaVersion)
    throw std::runtime_error("report: unsupported schema version");
  return report_from_json_node(j.at("report"));
}

// Human-readable rendering: one line per report node.
inline void render_text(const CheckReport& r, std::string& out, int depth = 0) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
  out += "[";
  out += status_name(r.status);
  out += "] ";
  out += r.name;
  if (r.timing_ms > 0 && depth == 0) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.2f ms)", r.timing_ms);
    out += buf;
  }
  if (r.status == Status::fail && r.residual_witness)
    out += "  witness: " + *r.residual_witness;
  if (!r.detail.empty() && r.status != Status::fail) out += "  -- " + r.detail;
  out += "\n";
  for (const CheckReport& c : r.sub_reports) render_text(c, out, depth + 1);
}

inline std::string render_text(const CheckReport& r) {
  std::string out;
  render_text(r, out, 0);
  return out;
}

}  // namespace pgcheck
