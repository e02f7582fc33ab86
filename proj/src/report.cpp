#include "fvslab/report.hpp"

#include <json.hpp>

namespace fvslab {

void VerificationReport::pass(const std::string& name, const std::string& expected,
                              const std::string& actual, const std::string& citation) {
  add(name, true, expected, actual, citation);
}

void VerificationReport::add(const std::string& name, bool ok, const std::string& expected,
                             const std::string& actual, const std::string& citation) {
  checks.push_back({name, ok ? "pass" : "fail", expected, actual, citation});
}

void VerificationReport::skipped(const std::string& name, const std::string& why) {
  checks.push_back({name, "skipped", "", why, ""});
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

bool VerificationReport::any_skipped() const {
  for (const auto& c : checks)
    if (c.status == "skipped") return true;
  return false;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["report_v"] = 1;
  j["command"] = command;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    if (!c.expected.empty()) jc["expected"] = c.expected;
    if (!c.actual.empty()) jc["actual"] = c.actual;
    if (!c.citation.empty()) jc["citation"] = c.citation;
    j["checks"].push_back(jc);
  }
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

}  // namespace fvslab
