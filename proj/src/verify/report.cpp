#include "qdv/verify/report.hpp"

#include <cstdio>

#include "qdv/group/finite_group.hpp"

namespace qdv::verify {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::SkippedCap:
      return "SKIPPED-CAP";
  }
  return "?";
}

void Report::fail(json w) {
  if (status == Status::Fail) return;  // keep the first counterexample
  status = Status::Fail;
  witness = w.is_null() ? json{{"reason", "unspecified"}} : std::move(w);
}

void Report::require(bool ok, const std::string& what, json detail) {
  if (ok) return;
  json w{{"failed", what}};
  if (!detail.is_null()) w["detail"] = std::move(detail);
  fail(std::move(w));
}

json Report::to_json() const {
  return json{{"check", check}, {"params", params}, {"status", to_string(status)}, {"witness", witness}, {"millis", millis}};
}

std::string Report::to_text() const {
  std::string s = to_string(status) + " " + check;
  for (const auto& [k, v] : params.items()) s += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  s += " (" + std::to_string(millis) + " ms)";
  if (status != Status::Pass && !witness.is_null()) s += "\n  " + witness.dump();
  return s;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report run_check(std::string check, json params, const std::function<void(Report&)>& body) {
  Report r;
  r.check = std::move(check);
  r.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const group::CapExceeded& e) {
    r.status = Status::SkippedCap;
    r.witness = json{{"cap", e.computation()}, {"limit", e.cap()}, {"message", e.what()}};
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int exit_code(const std::vector<Report>& reports) {
  bool cap = false;
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return 1;
    if (r.status == Status::SkippedCap) cap = true;
  }
  return cap ? 3 : 0;
}

}  // namespace qdv::verify
