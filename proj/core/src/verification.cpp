#include "steenrod/verification.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "steenrod/op_vector.hpp"
#include "steenrod/relations.hpp"
#include "steenrod/sequences.hpp"

namespace steenrod {

std::int64_t default_max_degree(Prime p) {
  switch (p.value()) {
    case 2: return 24;
    case 3: return 14;
    case 5: return 10;
    default: return 8;
  }
}

std::int64_t default_monotone_bound(Prime p) {
  switch (p.value()) {
    case 2: return 64;
    case 3: return 40;
    default: return 30;
  }
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites = {"bm",   "kernel", "vn",     "davis",
                                                  "straffin", "milnor", "mseq", "rtable",
                                                  "toeplitz", "binom",  "monotone"};
  return suites;
}

bool is_known_suite(const std::string& name) {
  return name == "all" ||
         std::find(known_suites().begin(), known_suites().end(), name) != known_suites().end();
}

namespace {

CheckResult make(std::string suite, Prime p, std::int64_t degree, nlohmann::json params, bool ok,
                 std::string witness = "") {
  return CheckResult{std::move(suite), p.value(), degree, std::move(params),
                     ok ? CheckStatus::pass : CheckStatus::fail,
                     ok ? std::string() : std::move(witness)};
}

CheckResult skip(std::string suite, Prime p, std::int64_t degree, nlohmann::json params,
                 std::string note) {
  return CheckResult{std::move(suite), p.value(), degree, std::move(params), CheckStatus::skipped,
                     std::move(note)};
}

std::string residual_text(const std::vector<std::int64_t>& r) {
  std::ostringstream out;
  out << "residual [";
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
  out << "]";
  return out.str();
}

// Route agreement, nonvanishing of <chi P^n, xi^R>, and the defining
// relation, per degree.
CheckResult check_milnor(std::int64_t n, Prime p) {
  OpVector dual = chi_Pn_dual(n, p);
  if (!(dual == chi_Pn_inductive(n, p)))
    return make("milnor", p, n, {{"n", n}}, false, "dual and inductive chi routes disagree");
  const auto& coeffs = dual.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] == 0)
      return make("milnor", p, n, {{"n", n}}, false,
                  "zero pairing at " + monomial_basis(n, p)[i].tuple_text());
  if (n >= 1) {
    OpVector sum(n, p);
    for (std::int64_t i = 0; i <= n; ++i) sum = sum + op_Pi_chi_Pnmi(i, n, p);
    if (!sum.is_zero())
      return make("milnor", p, n, {{"n", n}}, false, "defining relation sum is nonzero");
  }
  return make("milnor", p, n, {{"n", n}}, true);
}

// All valid (l, k) relation vectors in degree n annihilated by mu.
std::vector<CheckResult> check_bm(std::int64_t n, Prime p) {
  std::vector<CheckResult> out;
  std::int64_t ln = l_of_n(n, p);
  std::int64_t kmin = -2 * (ln + 1), kmax = n + 2 * (ln + 1);
  for (std::int64_t l = 0; l <= ln; ++l) {
    bool ok = true;
    std::string witness;
    for (std::int64_t k = kmin; k <= kmax && ok; ++k) {
      BmResult res = verify_bm(n, l, k, p);
      if (res.status != BmStatus::pass) {
        ok = false;
        witness = "(p,n,l,k)=(" + std::to_string(p.value()) + "," + std::to_string(n) + "," +
                  std::to_string(l) + "," + std::to_string(k) + ") " + residual_text(res.residual);
      }
    }
    out.push_back(make("bm", p, n, {{"n", n}, {"l", l}, {"k_min", kmin}, {"k_max", kmax}}, ok,
                       witness));
  }
  // Just past the threshold the hypothesis fails; record the observed
  // residuals without asserting anything about them.
  std::int64_t l_bad = ln + 1;
  std::size_t nonzero = 0, total = 0;
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    BmResult res = verify_bm(n, l_bad, k, p);
    ++total;
    if (std::any_of(res.residual.begin(), res.residual.end(),
                    [](std::int64_t x) { return x != 0; }))
      ++nonzero;
  }
  out.push_back(skip("bm", p, n, {{"n", n}, {"l", l_bad}, {"k_min", kmin}, {"k_max", kmax}},
                     "hypothesis not met; " + std::to_string(nonzero) + "/" +
                         std::to_string(total) + " residuals nonzero"));
  return out;
}

CheckResult check_kernel(std::int64_t n, Prime p) {
  std::int64_t ln = l_of_n(n, p);
  std::int64_t mmax = 2 * (ln + 1);
  for (std::int64_t m = -mmax; m <= mmax; ++m)
    if (!kernel_certificate(n, m, p))
      return make("kernel", p, n, {{"n", n}, {"m", m}}, false, "kernel certificate failed");
  return make("kernel", p, n, {{"n", n}, {"m_range", {-mmax, mmax}}}, true);
}

CheckResult check_vn(std::int64_t n, Prime p) {
  return make("vn", p, n, {{"n", n}}, vn_basis_certificate(n, p), "V_n basis certificate failed");
}

CheckResult check_mseq(std::int64_t n, Prime p) {
  ExponentSeq m = construct_M(n, p);
  if (!satisfies_m_conditions(m))
    return make("mseq", p, n, {{"n", n}}, false, "extremal conditions violated");
  if (m.weight() != l_of_n(n, p) + 1)
    return make("mseq", p, n, {{"n", n}}, false,
                "weight " + std::to_string(m.weight()) + " != l(n)+1");
  for (const ExponentSeq& r : enumerate_monomials(n, p))
    if (m.rlex_less(r))
      return make("mseq", p, n, {{"n", n}}, false, "not right-lex maximal: " + r.tuple_text());
  if (!m_uniqueness_check(n, p))
    return make("mseq", p, n, {{"n", n}}, false, "extremal sequence not unique");
  return make("mseq", p, n, {{"n", n}}, true);
}

CheckResult check_rtable(std::int64_t n, Prime p) {
  return make("rtable", p, n, {{"n", n}}, triangularity_certificate(n, p),
              "triangular pairing failed");
}

std::vector<CheckResult> check_binom(Prime p) {
  std::vector<CheckResult> out;

  bool lucas_ok = true;
  std::string lucas_witness;
  for (std::int64_t m = -64; m <= 64 && lucas_ok; ++m)
    for (std::int64_t l = 0; l <= 32; ++l)
      if (binom_mod_p(m, l, p).value() != p.reduce(binom_int(m, l))) {
        lucas_ok = false;
        lucas_witness = "(m,l)=(" + std::to_string(m) + "," + std::to_string(l) + ")";
        break;
      }
  out.push_back(make("binom", p, -1, {{"identity", "lucas_vs_exact"}}, lucas_ok, lucas_witness));

  bool pascal_ok = true;
  for (std::int64_t m = -32; m <= 32 && pascal_ok; ++m)
    for (std::int64_t l = 1; l <= 16; ++l)
      if (binom_int(m, l) != binom_int(m - 1, l) + binom_int(m - 1, l - 1)) pascal_ok = false;
  out.push_back(make("binom", p, -1, {{"identity", "pascal"}}, pascal_ok, "pascal recursion"));

  // sum_k (-1)^k C(m,k) C(n-k,l) = C(n-m, l-m); the alternating-sum identity
  // behind B A_l(m) = A_l(m+1) is the case m = l+1.
  bool conv_ok = true;
  std::string conv_witness;
  for (std::int64_t m = 0; m <= 16 && conv_ok; ++m)
    for (std::int64_t l = m; l <= 16 && conv_ok; ++l)
      for (std::int64_t n = -32; n <= 32; ++n) {
        BigInt sum = 0;
        for (std::int64_t k = 0; k <= m; ++k) {
          BigInt term = binom_int(m, k) * binom_int(n - k, l);
          sum += (k % 2 == 0) ? term : -term;
        }
        if (sum != binom_int(n - m, l - m)) {
          conv_ok = false;
          conv_witness = "(m,l,n)=(" + std::to_string(m) + "," + std::to_string(l) + "," +
                         std::to_string(n) + ")";
          break;
        }
      }
  out.push_back(make("binom", p, -1, {{"identity", "alternating_convolution"}}, conv_ok,
                     conv_witness));

  bool bin1_ok = true;
  for (std::int64_t l = 0; l <= 16 && bin1_ok; ++l)
    for (std::int64_t n = 0; n <= 16; ++n) {
      BigInt sum = 0;
      for (std::int64_t k = 0; k <= l + 1; ++k) {
        BigInt term = binom_int(l + 1, k) * binom_int(n - k, l);
        sum += (k % 2 == 0) ? term : -term;
      }
      if (sum != 0) {
        bin1_ok = false;
        break;
      }
    }
  out.push_back(make("binom", p, -1, {{"identity", "alternating_vanishing"}}, bin1_ok, ""));

  return out;
}

CheckResult check_toeplitz(std::int64_t l, std::int64_t m_lo, std::int64_t m_hi, Prime p) {
  for (std::int64_t m = m_lo; m <= m_hi; ++m)
    if (!toeplitz_certificate(l, m))
      return make("toeplitz", p, -1, {{"l", l}, {"m", m}}, false, "det or B-identity failed");
  return make("toeplitz", p, -1, {{"l", l}, {"m_range", {m_lo, m_hi}}}, true);
}

}  // namespace

VerificationReport run_verification(std::vector<std::string> suites, Prime p,
                                    std::int64_t max_degree, unsigned jobs,
                                    const SuiteRanges& ranges) {
  if (std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = known_suites();
  for (const auto& s : suites)
    if (!is_known_suite(s)) throw std::invalid_argument("unknown suite: " + s);
  if (max_degree < 0) max_degree = default_max_degree(p);
  if (jobs == 0) jobs = 1;

  // Each task yields a block of results; blocks are re-assembled in task
  // order so the report is identical for any worker count.
  std::vector<std::function<std::vector<CheckResult>()>> tasks;
  for (const std::string& suite : suites) {
    if (suite == "milnor") {
      for (std::int64_t n = 0; n <= max_degree; ++n)
        tasks.push_back([n, p] { return std::vector<CheckResult>{check_milnor(n, p)}; });
    } else if (suite == "bm") {
      for (std::int64_t n = 1; n <= max_degree; ++n)
        tasks.push_back([n, p] { return check_bm(n, p); });
    } else if (suite == "kernel") {
      for (std::int64_t n = 1; n <= max_degree; ++n)
        tasks.push_back([n, p] { return std::vector<CheckResult>{check_kernel(n, p)}; });
    } else if (suite == "vn") {
      for (std::int64_t n = 0; n <= max_degree; ++n)
        tasks.push_back([n, p] { return std::vector<CheckResult>{check_vn(n, p)}; });
    } else if (suite == "davis") {
      if (p.value() != 2) {
        tasks.push_back([p] {
          return std::vector<CheckResult>{skip("davis", p, -1, {}, "p=2 only")};
        });
      } else {
        for (std::int64_t r = ranges.davis_r_lo; r <= ranges.davis_r_hi; ++r)
          tasks.push_back([r, p] {
            return std::vector<CheckResult>{
                make("davis", p, -1, {{"r", r}}, davis_check(r), "identity failed")};
          });
      }
    } else if (suite == "straffin") {
      if (p.value() != 2) {
        tasks.push_back([p] {
          return std::vector<CheckResult>{skip("straffin", p, -1, {}, "p=2 only")};
        });
      } else {
        for (std::int64_t r = ranges.straffin_r_lo; r <= ranges.straffin_r_hi; ++r)
          for (std::int64_t b = ranges.straffin_b_lo; b <= ranges.straffin_b_hi; ++b)
            tasks.push_back([r, b, p] {
              return std::vector<CheckResult>{make("straffin", p, -1, {{"r", r}, {"b", b}},
                                                   straffin_check(r, b), "sum nonzero")};
            });
      }
    } else if (suite == "mseq") {
      for (std::int64_t n = 0; n <= max_degree; ++n)
        tasks.push_back([n, p] { return std::vector<CheckResult>{check_mseq(n, p)}; });
    } else if (suite == "rtable") {
      for (std::int64_t n = 0; n <= max_degree; ++n)
        tasks.push_back([n, p] { return std::vector<CheckResult>{check_rtable(n, p)}; });
    } else if (suite == "toeplitz") {
      for (std::int64_t l = ranges.toeplitz_l_lo; l <= ranges.toeplitz_l_hi; ++l)
        tasks.push_back([l, p, &ranges] {
          return std::vector<CheckResult>{
              check_toeplitz(l, ranges.toeplitz_m_lo, ranges.toeplitz_m_hi, p)};
        });
    } else if (suite == "binom") {
      tasks.push_back([p] { return check_binom(p); });
    } else if (suite == "monotone") {
      std::int64_t bound = default_monotone_bound(p);
      tasks.push_back([bound, p] {
        return std::vector<CheckResult>{make("monotone", p, -1, {{"n_max", bound}},
                                             l_monotonicity_check(bound, p),
                                             "l(n) decreased")};
      });
    }
  }

  std::vector<std::vector<CheckResult>> blocks(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
      blocks[i] = tasks[i]();
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  VerificationReport report{p.value(), suites, {}};
  for (auto& block : blocks)
    for (auto& c : block) report.checks.push_back(std::move(c));
  return report;
}

}  // namespace steenrod
