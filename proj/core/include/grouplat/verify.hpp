#pragma once

#include <string>
#include <vector>

namespace grouplat {

struct VerificationCheck {
  std::string id;
  std::string description;
  std::string anchor;    // source anchor for the claim
  std::string status;    // "pass", "fail", or "skipped(<reason>)"
  std::string measured;  // measured vs expected values
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCheck> checks;

  bool ok() const;
  int exit_code() const { return ok() ? 0 : 1; }
  std::string to_text() const;
  std::string to_json() const;
};

/// Suites: thesis-core, parity, appendix-a, feit-palffy.
VerificationReport verify_suite(const std::string& name);
std::vector<std::string> verify_suite_names();

}  // namespace grouplat
