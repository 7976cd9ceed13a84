// Command-line front end: computes l(n), chi P^n, the extremal sequence M and
// the R-table, and runs the certificate suites with machine-readable reports.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
// configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "steenrod/op_vector.hpp"
#include "steenrod/relations.hpp"
#include "steenrod/sequences.hpp"
#include "steenrod/verification.hpp"

namespace {

using namespace steenrod;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct DegreeRange {
  std::int64_t lo = 0, hi = 0;
};

// "a..b" inclusive, or a single integer.
DegreeRange parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  DegreeRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoll(text);
  } else {
    r.lo = std::stoll(text.substr(0, dots));
    r.hi = std::stoll(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range: " + text);
  return r;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << content;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("STEENROD_JOBS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

nlohmann::json seq_json(const ExponentSeq& r) {
  return {{"tuple", r.tuple_text()},
          {"monomial", r.monomial_text()},
          {"degree", r.degree()},
          {"weight", r.weight()},
          {"excess", r.excess()}};
}

int cmd_lofn(std::int64_t prime, const std::string& degrees, const std::string& format,
             const std::string& out_path) {
  Prime p(prime);
  DegreeRange range = parse_range(degrees);
  if (range.lo < 0) throw std::invalid_argument("degrees must be nonnegative");
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t n = range.lo; n <= range.hi; ++n)
      rows.push_back({{"n", n}, {"l", l_of_n(n, p)}});
    emit(nlohmann::json({{"prime", prime}, {"values", rows}}).dump(2) + "\n", out_path);
  } else {
    std::ostringstream text;
    for (std::int64_t n = range.lo; n <= range.hi; ++n)
      text << "(" << n << ", " << l_of_n(n, p) << ")\n";
    emit(text.str(), out_path);
  }
  return kExitPass;
}

int cmd_chi(std::int64_t prime, std::int64_t n, const std::string& format,
            const std::string& out_path) {
  Prime p(prime);
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  OpVector chi = chi_Pn_dual(n, p);
  for (std::int64_t c : chi.coeffs())
    if (c == 0) {
      std::cerr << "chi P^" << n << " has a zero pairing\n";
      return kExitMathFailure;
    }
  if (format == "json") {
    emit(to_json(chi).dump(2) + "\n", out_path);
  } else {
    std::ostringstream text;
    const auto& basis = monomial_basis(n, p);
    for (std::size_t i = 0; i < basis.size(); ++i)
      text << basis[i].monomial_text() << " : " << chi.coeffs()[i] << "\n";
    emit(text.str(), out_path);
  }
  return kExitPass;
}

int cmd_mseq(std::int64_t prime, std::int64_t n, const std::string& format,
             const std::string& out_path) {
  Prime p(prime);
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  ExponentSeq m = construct_M(n, p);
  if (format == "json") {
    emit(seq_json(m).dump(2) + "\n", out_path);
  } else {
    std::ostringstream text;
    text << m.tuple_text() << "  " << m.monomial_text() << "  degree=" << m.degree()
         << " weight=" << m.weight() << " excess=" << m.excess() << "\n";
    emit(text.str(), out_path);
  }
  return kExitPass;
}

int cmd_rtable(std::int64_t prime, std::int64_t n, const std::string& format,
               const std::string& out_path) {
  Prime p(prime);
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  RTable table(n, p);
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t j = table.min_weight(); j <= table.max_weight(); ++j)
      rows.push_back(seq_json(table.at_weight(j)));
    emit(nlohmann::json({{"prime", prime}, {"degree", n}, {"entries", rows}}).dump(2) + "\n",
         out_path);
  } else {
    std::ostringstream text;
    for (std::int64_t j = table.min_weight(); j <= table.max_weight(); ++j) {
      const ExponentSeq& r = table.at_weight(j);
      text << "j=" << j << "  " << r.tuple_text() << "  " << r.monomial_text() << "\n";
    }
    emit(text.str(), out_path);
  }
  return kExitPass;
}

int cmd_verify(std::int64_t prime, std::vector<std::string> suites, std::int64_t max_degree,
               unsigned jobs, const SuiteRanges& ranges, const std::string& format,
               const std::string& out_path) {
  Prime p(prime);
  if (suites.empty()) suites = {"all"};
  VerificationReport report = run_verification(std::move(suites), p, max_degree, jobs, ranges);
  if (format == "json")
    emit(report.to_json().dump(2) + "\n", out_path);
  else if (format == "csv")
    emit(report.to_csv(), out_path);
  else
    emit(report.to_text(), out_path);
  return report.all_passed() ? kExitPass : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic engine for the mod-p Steenrod reduced powers and their antipode"};
  app.require_subcommand(1);
  app.fallthrough();

  std::int64_t prime = 2;
  std::string format = "text";
  std::string out_path;
  app.add_option("--prime", prime, "prime modulus (default 2)")->capture_default_str();
  app.add_option("--format", format, "output format: json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "write output to FILE instead of stdout");

  auto* lofn = app.add_subcommand("lofn", "table of the threshold l(n) over a degree range");
  std::string degrees = "0..16";
  lofn->add_option("--degrees", degrees, "inclusive range a..b or a single degree");

  auto* chi = app.add_subcommand("chi", "pairings of chi P^n against all degree-n dual monomials");
  std::int64_t chi_n = 0;
  chi->add_option("--degree", chi_n, "degree n")->required();

  auto* mseq = app.add_subcommand("mseq", "the extremal (right-lex maximal) degree-n sequence");
  std::int64_t mseq_n = 0;
  mseq->add_option("--degree", mseq_n, "degree n")->required();

  auto* rtable = app.add_subcommand("rtable", "the triangular sequence family R_{n,j}");
  std::int64_t rtable_n = 0;
  rtable->add_option("--degree", rtable_n, "degree n")->required();

  auto* verify = app.add_subcommand("verify", "run certificate suites and report pass/fail");
  std::vector<std::string> suites;
  std::int64_t max_degree = -1;
  unsigned jobs = default_jobs();
  verify->add_option("--suite", suites,
                     "suites: bm kernel vn davis straffin milnor mseq rtable toeplitz binom "
                     "monotone all");
  verify->add_option("--max-degree", max_degree, "degree sweep bound (default depends on prime)");
  verify->add_option("--jobs", jobs, "worker count (env STEENROD_JOBS)");
  std::string r_range, b_range, l_range, m_range;
  verify->add_option("--r", r_range, "r range a..b for the davis/straffin suites");
  verify->add_option("--b", b_range, "b range a..b for the straffin suite");
  verify->add_option("--l", l_range, "l range a..b for the toeplitz suite");
  verify->add_option("--m", m_range, "m range a..b for the toeplitz suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (lofn->parsed()) return cmd_lofn(prime, degrees, format, out_path);
    if (chi->parsed()) return cmd_chi(prime, chi_n, format, out_path);
    if (mseq->parsed()) return cmd_mseq(prime, mseq_n, format, out_path);
    if (rtable->parsed()) return cmd_rtable(prime, rtable_n, format, out_path);
    if (verify->parsed()) {
      SuiteRanges ranges;
      if (!r_range.empty()) {
        DegreeRange r = parse_range(r_range);
        ranges.davis_r_lo = ranges.straffin_r_lo = r.lo;
        ranges.davis_r_hi = ranges.straffin_r_hi = r.hi;
      }
      if (!b_range.empty()) {
        DegreeRange b = parse_range(b_range);
        ranges.straffin_b_lo = b.lo;
        ranges.straffin_b_hi = b.hi;
      }
      if (!l_range.empty()) {
        DegreeRange l = parse_range(l_range);
        ranges.toeplitz_l_lo = l.lo;
        ranges.toeplitz_l_hi = l.hi;
      }
      if (!m_range.empty()) {
        DegreeRange m = parse_range(m_range);
        ranges.toeplitz_m_lo = m.lo;
        ranges.toeplitz_m_hi = m.hi;
      }
      return cmd_verify(prime, suites, max_degree, jobs, ranges, format, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitUsage;
}
