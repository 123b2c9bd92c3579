#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwpairs::cli {

using nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  /// First failing coefficient or input; always set for failures.
  ordered_json witness;
  std::string detail;
};

/// Machine-readable result of one command. Timing is kept out of the JSON
/// unless requested so that output is byte-stable.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();

  void add(Check c);
  void pass(const std::string& name, std::string detail = {});
  void fail(const std::string& name, ordered_json witness, std::string detail = {});
  void skip(const std::string& name, std::string detail);
  /// pass(name) or fail(name, witness) depending on ok.
  void expect(bool ok, const std::string& name, const ordered_json& witness, std::string detail = {});
  /// Appends another report's checks under a name prefix.
  void merge(const Report& other);

  const std::string& command() const { return command_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;
  int count(Status s) const;

  ordered_json to_json(std::optional<double> timing_ms = std::nullopt) const;
  /// One line per failing or skipped check plus a totals line.
  std::string summary() const;

 private:
  std::string command_;
  std::vector<Check> checks_;
};

}  // namespace gwpairs::cli
