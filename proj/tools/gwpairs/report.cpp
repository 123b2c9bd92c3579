#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace gwpairs::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

void Report::add(Check c) {
  if (c.status == Status::fail && c.witness.is_null()) c.witness = c.detail.empty() ? c.name : c.detail;
  checks_.push_back(std::move(c));
}

void Report::pass(const std::string& name, std::string detail) {
  add({name, Status::pass, nullptr, std::move(detail)});
}

void Report::fail(const std::string& name, ordered_json witness, std::string detail) {
  add({name, Status::fail, std::move(witness), std::move(detail)});
}

void Report::skip(const std::string& name, std::string detail) {
  add({name, Status::skipped, nullptr, std::move(detail)});
}

void Report::expect(bool ok, const std::string& name, const ordered_json& witness, std::string detail) {
  if (ok) {
    pass(name, std::move(detail));
  } else {
    fail(name, witness, std::move(detail));
  }
}

void Report::merge(const Report& other) {
  for (Check c : other.checks_) {
    c.name = other.command_ + ": " + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::fail; });
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

ordered_json Report::to_json(std::optional<double> timing_ms) const {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command_;
  j["inputs"] = inputs;
  j["status"] = passed() ? "pass" : "fail";
  j["counts"] = {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"skipped", count(Status::skipped)}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : checks_) {
    ordered_json x;
    x["name"] = c.name;
    x["status"] = to_string(c.status);
    if (!c.witness.is_null()) x["witness"] = c.witness;
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  j["results"] = results;
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    if (c.status == Status::pass) continue;
    os << to_string(c.status) << ": " << c.name;
    if (c.status == Status::fail) os << " (witness " << c.witness.dump() << ")";
    if (!c.detail.empty()) os << " - " << c.detail;
    os << "\n";
  }
  os << command_ << ": " << (passed() ? "pass" : "FAIL") << " (" << count(Status::pass) << " passed, "
     << count(Status::fail) << " failed, " << count(Status::skipped) << " skipped)\n";
  return os.str();
}

}  // namespace gwpairs::cli
