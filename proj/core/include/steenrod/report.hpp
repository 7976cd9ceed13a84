#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace steenrod {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

/// One verified statement instance: which suite, at which parameters, and
/// whether it held. A failure carries a witness describing the offending
/// instance (typically the parameters and a nonzero residual).
struct CheckResult {
  std::string suite;
  std::int64_t prime;
  std::int64_t degree;  // -1 when not degree-indexed
  nlohmann::json params;
  CheckStatus status;
  std::string witness;  // empty unless failed or informational
};

struct VerificationReport {
  std::int64_t prime;
  std::vector<std::string> suites;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool all_passed() const { return failed() == 0; }

  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

}  // namespace steenrod
