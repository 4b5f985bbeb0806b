#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace altrun::cli {

struct CheckResult {
  std::string check_id;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  unsigned max_n = 0;
  unsigned order = 0;
  std::vector<CheckResult> checks;  // sorted by check_id
  bool overall = false;

  [[nodiscard]] std::string to_json() const;
};

struct VerifyOptions {
  unsigned max_n = 7;
  unsigned order = 12;
};

/// Suite names: all, grammar, triangles, enumeration, davidbarton, series, gamma.
const std::vector<std::string>& suite_names();

/// Runs every check of the suite concurrently. SizeLimit raised by an
/// enumeration is rethrown; any other exception fails its check.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace altrun::cli
