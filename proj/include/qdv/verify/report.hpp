#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qdv::verify {

using json = nlohmann::json;

enum class Status { Pass, Fail, SkippedCap };
std::string to_string(Status s);

/// One JSON line: {"check", "params", "status", "witness", "millis"}.
struct Report {
  std::string check;
  json params = json::object();
  Status status = Status::Pass;
  json witness;  // null unless there is something to show; always set on FAIL and SKIPPED-CAP
  std::int64_t millis = 0;

  /// Marks the report failed with a counterexample.
  void fail(json w);
  /// Records a sub-check; the first failing one becomes the witness.
  void require(bool ok, const std::string& what, json detail = nullptr);

  json to_json() const;
  std::string to_text() const;
};

std::string fnv1a_hex(std::string_view data);

/// Times `body` and maps group::CapExceeded to SKIPPED-CAP with the cap named in the witness.
Report run_check(std::string check, json params, const std::function<void(Report&)>& body);

/// 0 when all pass, 1 on any FAIL, otherwise 3 when something hit a cap.
int exit_code(const std::vector<Report>& reports);

}  // namespace qdv::verify
