#pragma once

// Structured pass/fail records shared by every verification routine.
// A failing check always carries a printable witness (the nonzero residual).

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgcheck {

enum class Status { pass, fail, error, skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    case Status::skipped: return "skipped";
  }
  return "error";
}

inline std::optional<Status> status_from_name(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "error") return Status::error;
  if (s == "skipped") return Status::skipped;
  return std::nullopt;
}

struct CheckReport {
  std::string name;
  Status status = Status::pass;
  std::optional<std::string> residual_witness;  // present whenever status == fail
  std::string detail;                           // free-form note, e.g. a reduction argument
  std::vector<CheckReport> sub_reports;
  double timing_ms = 0.0;  // runtime metadata; excluded from canonical JSON

  bool passed() const { return status == Status::pass; }

  static CheckReport pass(std::string name, std::string detail = "") {
    CheckReport r;
    r.name = std::move(name);
    r.status = Status::pass;
    r.detail = std::move(detail);
    return r;
  }

  static CheckReport fail(std::string name, std::string witness, std::string detail = "") {
    CheckReport r;
    r.name = std::move(name);
    r.status = Status::fail;
    r.residual_witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
  }

  static CheckReport error(std::string name, std::string message) {
    CheckReport r;
    r.name = std::move(name);
    r.status = Status::error;
    r.detail = std::move(message);
    return r;
  }

  static CheckReport skipped(std::string name, std::string why = "") {
    CheckReport r;
    r.name = std::move(name);
    r.status = Status::skipped;
    r.detail = std::move(why);
    return r;
  }
};

// Parent passes iff no child failed or errored; skipped children do not block.
// The first failing child contributes the witness, prefixed with its path.
inline CheckReport aggregate(std::string name, std::vector<CheckReport> children) {
  CheckReport r;
  r.name = std::move(name);
  r.status = Status::pass;
  for (const CheckReport& c : children) {
    if (c.status == Status::error && r.status != Status::error) {
      r.status = Status::error;
      r.detail = c.name + ": " + c.detail;
    } else if (c.status == Status::fail && r.status == Status::pass) {
      r.status = Status::fail;
      r.residual_witness = c.name + ": " + c.residual_witness.value_or("");
    }
  }
  r.sub_reports = std::move(children);
  return r;
}

}  // namespace pgcheck
