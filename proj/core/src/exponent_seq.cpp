#include "steenrod/exponent_seq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace steenrod {

std::int64_t generator_degree(unsigned j, Prime p) {
  std::int64_t d = 0, pw = 1;
  for (unsigned i = 0; i < j; ++i) {
    d += pw;
    pw *= p.value();
  }
  return d;
}

ExponentSeq::ExponentSeq(Prime p, std::vector<std::int64_t> entries)
    : prime_(p), entries_(std::move(entries)) {
  for (std::int64_t r : entries_)
    if (r < 0) throw std::invalid_argument("ExponentSeq: negative entry");
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

std::int64_t ExponentSeq::degree() const {
  std::int64_t d = 0;
  for (unsigned j = 1; j <= entries_.size(); ++j) d += entries_[j - 1] * generator_degree(j, prime_);
  return d;
}

std::int64_t ExponentSeq::weight() const {
  std::int64_t w = 0, pw = 1;
  for (std::int64_t r : entries_) {
    w += r * pw;
    pw *= prime_.value();
  }
  return w;
}

std::int64_t ExponentSeq::excess() const {
  std::int64_t e = 0;
  for (std::int64_t r : entries_) e += r;
  return e;
}

ExponentSeq ExponentSeq::operator+(const ExponentSeq& o) const {
  if (!(prime_ == o.prime_)) throw std::invalid_argument("ExponentSeq: prime mismatch");
  std::vector<std::int64_t> sum(std::max(entries_.size(), o.entries_.size()), 0);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = entry(i + 1) + o.entry(i + 1);
  return ExponentSeq(prime_, std::move(sum));
}

bool ExponentSeq::rlex_less(const ExponentSeq& o) const {
  std::size_t top = std::max(entries_.size(), o.entries_.size());
  for (std::size_t j = top; j >= 1; --j) {
    std::int64_t a = entry(j), b = o.entry(j);
    if (a != b) return a < b;
  }
  return false;
}

std::string ExponentSeq::tuple_text() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ",";
    out << entries_[i];
  }
  out << ")";
  return out.str();
}

std::string ExponentSeq::monomial_text() const {
  if (entries_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (unsigned j = 1; j <= entries_.size(); ++j) {
    std::int64_t r = entries_[j - 1];
    if (r == 0) continue;
    if (!first) out << " ";
    first = false;
    out << "xi" << j;
    if (r > 1) out << "^" << r;
  }
  return out.str();
}

ExponentSeq ExponentSeq::parse_tuple(Prime p, const std::string& text) {
  std::string s = text;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("ExponentSeq: malformed tuple '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::int64_t> entries;
  if (!s.empty()) {
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) entries.push_back(std::stoll(tok));
  }
  return ExponentSeq(p, std::move(entries));
}

ExponentSeq ExponentSeq::parse_monomial(Prime p, const std::string& text) {
  if (text == "1") return ExponentSeq(p, {});
  std::vector<std::int64_t> entries;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind("xi", 0) != 0)
      throw std::invalid_argument("ExponentSeq: malformed monomial '" + text + "'");
    std::string body = tok.substr(2);
    std::size_t caret = body.find('^');
    unsigned j = static_cast<unsigned>(std::stoul(body.substr(0, caret)));
    std::int64_t r = caret == std::string::npos ? 1 : std::stoll(body.substr(caret + 1));
    if (j == 0) throw std::invalid_argument("ExponentSeq: generator index must be >= 1");
    if (entries.size() < j) entries.resize(j, 0);
    entries[j - 1] += r;
  }
  return ExponentSeq(p, std::move(entries));
}

namespace {

// Choose exponents from the highest admissible generator downward; taking
// the larger exponent first at each level yields right-lex descending order.
void enumerate_rec(Prime p, unsigned j, std::int64_t remaining, std::vector<std::int64_t>& current,
                   std::vector<ExponentSeq>& out) {
  if (j == 0) {
    if (remaining == 0) out.emplace_back(p, current);
    return;
  }
  if (j == 1) {
    current[0] = remaining;
    out.emplace_back(p, current);
    current[0] = 0;
    return;
  }
  std::int64_t d = generator_degree(j, p);
  for (std::int64_t r = remaining / d; r >= 0; --r) {
    current[j - 1] = r;
    enumerate_rec(p, j - 1, remaining - r * d, current, out);
  }
  current[j - 1] = 0;
}

}  // namespace

std::vector<ExponentSeq> enumerate_monomials(std::int64_t n, Prime p) {
  if (n < 0) throw std::domain_error("enumerate_monomials: negative degree");
  unsigned jmax = 1;
  while (generator_degree(jmax + 1, p) <= n) ++jmax;
  if (n == 0) return {ExponentSeq(p, {})};
  std::vector<std::int64_t> current(jmax, 0);
  std::vector<ExponentSeq> out;
  enumerate_rec(p, jmax, n, current, out);
  return out;
}

}  // namespace steenrod
