#pragma once

#include <string>
#include <vector>

namespace fvslab {

// Verification report rendered as versioned JSON (report_v 1). Rationals are
// emitted as "p/q" strings, never floats.
struct VerificationReport {
  struct Check {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string expected;
    std::string actual;
    std::string citation;
  };
  std::string command;
  std::vector<Check> checks;
  long long elapsed_ms = 0;

  void pass(const std::string& name, const std::string& expected, const std::string& actual,
            const std::string& citation = "");
  void add(const std::string& name, bool ok, const std::string& expected,
           const std::string& actual, const std::string& citation = "");
  void skipped(const std::string& name, const std::string& why);

  bool all_pass() const;
  bool any_skipped() const;
  std::string to_json() const;
};

}  // namespace fvslab
