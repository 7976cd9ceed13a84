#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steenrod/fp.hpp"
#include "steenrod/report.hpp"

namespace steenrod {

/// Sweep bound keeping a full run in the seconds range: p=2 up to degree 24,
/// p=3 up to 14, p=5 up to 10, anything larger up to 8.
std::int64_t default_max_degree(Prime p);

/// Bound for the l(n) monotonicity sweep: 64 / 40 / 30 by prime.
std::int64_t default_monotone_bound(Prime p);

const std::vector<std::string>& known_suites();
bool is_known_suite(const std::string& name);

/// Inclusive parameter ranges for the suites that are not degree sweeps.
struct SuiteRanges {
  std::int64_t davis_r_lo = 2, davis_r_hi = 4;
  std::int64_t straffin_r_lo = 0, straffin_r_hi = 2;
  std::int64_t straffin_b_lo = 2, straffin_b_hi = 3;
  std::int64_t toeplitz_l_lo = 0, toeplitz_l_hi = 8;
  std::int64_t toeplitz_m_lo = -4, toeplitz_m_hi = 8;
};

/// Runs the named certificate suites over degrees 0..max_degree at prime p,
/// fanning independent checks out to `jobs` workers. Results are emitted in
/// a deterministic order independent of the worker count.
VerificationReport run_verification(std::vector<std::string> suites, Prime p,
                                    std::int64_t max_degree, unsigned jobs,
                                    const SuiteRanges& ranges = {});

}  // namespace steenrod
