#include "steenrod/sequences.hpp"

#include <mutex>
#include <stdexcept>

#include "steenrod/op_vector.hpp"
#include "steenrod/relations.hpp"

namespace steenrod {

bool satisfies_m_conditions(const ExponentSeq& r) {
  std::int64_t p = r.prime().value();
  for (unsigned j = 1; j <= r.length(); ++j)
    if (r.entry(j) > p) return false;
  for (unsigned j = 2; j <= r.length(); ++j)
    if (r.entry(j) == p)
      for (unsigned i = 1; i < j; ++i)
        if (r.entry(i) > 0) return false;
  return true;
}

ExponentSeq construct_M(std::int64_t n, Prime p) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, ExponentSeq> cache;
  auto key = std::make_pair(p.value(), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  if (n < 0) throw std::domain_error("construct_M: negative degree");
  unsigned jmax = 1;
  while (generator_degree(jmax + 1, p) <= n) ++jmax;
  std::vector<std::int64_t> entries(jmax, 0);
  std::int64_t remaining = n;
  for (unsigned j = jmax; j >= 1 && remaining > 0; --j) {
    std::int64_t d = generator_degree(j, p);
    entries[j - 1] = remaining / d;
    remaining %= d;
  }
  ExponentSeq m(p, std::move(entries));

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, m);
  return m;
}

ExponentSeq apply_one_move(const ExponentSeq& r) {
  Prime prime = r.prime();
  std::int64_t p = prime.value();
  std::vector<std::int64_t> e = r.entries();
  auto at = [&](std::size_t j) -> std::int64_t { return j >= 1 && j <= e.size() ? e[j - 1] : 0; };
  auto bump = [&](std::size_t j, std::int64_t delta) {
    if (e.size() < j) e.resize(j, 0);
    e[j - 1] += delta;
  };

  // Condition (2): some entry exceeds p.
  for (std::size_t j = 1; j <= e.size(); ++j) {
    if (at(j) <= p) continue;
    if (j == 1) {
      bump(1, -(p + 1));
      bump(2, +1);
    } else {
      bump(j - 1, +p);
      bump(j, -(p + 1));
      bump(j + 1, +1);
    }
    return ExponentSeq(prime, std::move(e));
  }

  // Condition (3): entry p at position j with a nonzero entry below.
  for (std::size_t j = 2; j <= e.size(); ++j) {
    if (at(j) != p) continue;
    std::size_t i = 1;
    while (i < j && at(i) == 0) ++i;
    if (i == j) continue;
    // Degree-preserving trade: drop one unit at i (compensated by p at i-1
    // when i > 1), clear the p at j, add one at j+1.
    bump(i, -1);
    if (i > 1) bump(i - 1, +p);
    bump(j, -p);
    bump(j + 1, +1);
    return ExponentSeq(prime, std::move(e));
  }

  return r;
}

ExponentSeq apply_moves(const ExponentSeq& r) {
  ExponentSeq current = r;
  while (true) {
    ExponentSeq next = apply_one_move(current);
    if (next == current) return current;
    if (next.degree() != current.degree())
      throw std::logic_error("apply_moves: move changed the degree");
    if (!current.rlex_less(next))
      throw std::logic_error("apply_moves: move did not increase right-lex order");
    current = next;
  }
}

bool m_uniqueness_check(std::int64_t n, Prime p) {
  ExponentSeq m = construct_M(n, p);
  std::size_t survivors = 0;
  for (const ExponentSeq& r : enumerate_monomials(n, p)) {
    if (!satisfies_m_conditions(r)) continue;
    ++survivors;
    if (!(r == m)) return false;
  }
  return survivors == 1;
}

RTable::RTable(std::int64_t n, Prime p) : n_(n), min_weight_(l_of_n(n, p) + 1) {
  // R_{n,j} = (1,0,0,...) + R_{n-1,j-1}, based at the extremal sequence.
  entries_.push_back(construct_M(n, p));
  if (n > 0) {
    RTable lower(n - 1, p);
    ExponentSeq e1(p, {1});
    for (std::int64_t j = min_weight_ + 1; j <= n; ++j)
      entries_.push_back(e1 + lower.at_weight(j - 1));
  }
  for (std::int64_t j = min_weight_; j <= n; ++j) {
    const ExponentSeq& r = at_weight(j);
    if (r.degree() != n || r.weight() != j)
      throw std::logic_error("RTable: entry fails its degree/weight contract");
  }
}

const ExponentSeq& RTable::at_weight(std::int64_t j) const {
  if (j < min_weight_ || j > n_) throw std::out_of_range("RTable: weight out of range");
  return entries_[static_cast<std::size_t>(j - min_weight_)];
}

RTable build_r_table(std::int64_t n, Prime p) { return RTable(n, p); }

bool triangularity_certificate(std::int64_t n, Prime p) {
  RTable table(n, p);
  for (std::int64_t j = table.min_weight(); j <= n; ++j) {
    const ExponentSeq& r = table.at_weight(j);
    if (op_Pi_chi_Pnmi(j, n, p).pairing(r) == 0) return false;
    for (std::int64_t i = j + 1; i <= n; ++i)
      if (op_Pi_chi_Pnmi(i, n, p).pairing(r) != 0) return false;
  }
  return true;
}

bool l_monotonicity_check(std::int64_t nmax, Prime p) {
  for (std::int64_t n = 0; n < nmax; ++n)
    if (l_of_n(n + 1, p) < l_of_n(n, p)) return false;
  return true;
}

}  // namespace steenrod
