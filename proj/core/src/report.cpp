#include "steenrod/report.hpp"

#include <algorithm>
#include <sstream>

namespace steenrod {

namespace {
constexpr const char* kVersion = "steenrod 1.0.0";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

std::size_t VerificationReport::passed() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::pass; });
}

std::size_t VerificationReport::failed() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::size_t VerificationReport::skipped() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::skipped; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json jchecks = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    nlohmann::json jc = {{"suite", c.suite}, {"params", c.params}, {"status", to_string(c.status)}};
    if (c.degree >= 0) jc["degree"] = c.degree;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    jchecks.push_back(std::move(jc));
  }
  return {{"prime", prime},
          {"suites", suites},
          {"generated_by_version", kVersion},
          {"checks", jchecks},
          {"summary", {{"pass", passed()}, {"fail", failed()}, {"skipped", skipped()}}}};
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "suite,prime,degree,params,status\n";
  for (const CheckResult& c : checks) {
    std::string params = c.params.dump();
    // CSV-quote the JSON params field.
    std::string quoted = "\"";
    for (char ch : params) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    quoted += "\"";
    out << c.suite << "," << c.prime << ",";
    if (c.degree >= 0) out << c.degree;
    out << "," << quoted << "," << to_string(c.status) << "\n";
  }
  return out.str();
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << "[" << to_string(c.status) << "] " << c.suite << " p=" << c.prime;
    if (c.degree >= 0) out << " n=" << c.degree;
    if (!c.params.empty()) out << " " << c.params.dump();
    if (!c.witness.empty()) out << "  (" << c.witness << ")";
    out << "\n";
  }
  out << "summary: " << passed() << " passed, " << failed() << " failed, " << skipped()
      << " skipped\n";
  return out.str();
}

}  // namespace steenrod
