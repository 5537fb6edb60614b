#pragma once

#include <string>
#include <vector>

#include "divalg/json_util.hpp"

namespace divalg::scenarios {

enum class Status { Pass, Fail, Inconclusive };
std::string status_name(Status s);

struct Check {
  std::string id;
  std::string claim;
  std::string anchor;  // the statement the check verifies
  Status status = Status::Fail;
  Json witness = Json::object();
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string scenario) : scenario_(std::move(scenario)) {}

  const std::string& scenario() const { return scenario_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string id, std::string claim, std::string anchor, bool pass, Json witness = Json::object());
  void merge(const VerificationReport& other);

  /// Pass iff every check passes and carries an anchor; Fail if any check
  /// fails; Inconclusive otherwise.
  Status overall() const;
  std::vector<std::string> failing_ids() const;

  Json to_json() const;
  /// One line per check: scenario, id, status, anchor, claim, witness JSON.
  std::string to_tsv() const;
  std::string to_pretty() const;

 private:
  std::string scenario_;
  std::vector<Check> checks_;
};

}  // namespace divalg::scenarios
