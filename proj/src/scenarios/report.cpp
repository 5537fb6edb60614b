#include "divalg/scenarios/report.hpp"

#include <sstream>

namespace divalg::scenarios {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "fail";
}

void VerificationReport::add(std::string id, std::string claim, std::string anchor, bool pass, Json witness) {
  checks_.push_back(Check{std::move(id), std::move(claim), std::move(anchor), pass ? Status::Pass : Status::Fail, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

Status VerificationReport::overall() const {
  bool inconclusive = false;
  for (const auto& c : checks_) {
    if (c.status == Status::Fail || c.anchor.empty()) return Status::Fail;
    inconclusive = inconclusive || c.status == Status::Inconclusive;
  }
  return inconclusive ? Status::Inconclusive : Status::Pass;
}

std::vector<std::string> VerificationReport::failing_ids() const {
  std::vector<std::string> out;
  for (const auto& c : checks_) {
    if (c.status != Status::Pass || c.anchor.empty()) out.push_back(c.id);
  }
  return out;
}

Json VerificationReport::to_json() const {
  Json checks = Json::array();
  for (const auto& c : checks_) {
    Json j;
    j["id"] = c.id;
    j["claim"] = c.claim;
    j["anchor"] = c.anchor;
    j["status"] = status_name(c.status);
    j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  Json out;
  out["scenario"] = scenario_;
  out["overall"] = status_name(overall());
  out["checks"] = std::move(checks);
  return out;
}

namespace {

std::string tsv_field(std::string s) {
  for (auto& ch : s) {
    if (ch == '\t' || ch == '\n') ch = ' ';
  }
  return s;
}

}  // namespace

std::string VerificationReport::to_tsv() const {
  std::ostringstream os;
  os << "scenario\tid\tstatus\tanchor\tclaim\twitness\n";
  for (const auto& c : checks_) {
    os << tsv_field(scenario_) << '\t' << tsv_field(c.id) << '\t' << status_name(c.status) << '\t' << tsv_field(c.anchor)
       << '\t' << tsv_field(c.claim) << '\t' << c.witness.dump() << '\n';
  }
  os << tsv_field(scenario_) << "\toverall\t" << status_name(overall()) << "\t\t\t{}\n";
  return os.str();
}

std::string VerificationReport::to_pretty() const {
  std::ostringstream os;
  os << scenario_ << ": " << status_name(overall()) << " (" << checks_.size() << " checks)\n";
  for (const auto& c : checks_) {
    os << "  [" << status_name(c.status) << "] " << c.id << ": " << c.claim << "\n";
  }
  return os.str();
}

}  // namespace divalg::scenarios
