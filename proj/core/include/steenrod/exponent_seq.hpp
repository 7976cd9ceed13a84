#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steenrod/fp.hpp"

namespace steenrod {

/// Degree of the generator xi_j: (p^j - 1)/(p - 1).
std::int64_t generator_degree(unsigned j, Prime p);

/// Finitely supported exponent sequence R = (r_1, r_2, ...) indexing the
/// dual monomial xi^R. Trailing zeros are normalized away.
class ExponentSeq {
 public:
  ExponentSeq(Prime p, std::vector<std::int64_t> entries);

  Prime prime() const { return prime_; }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  /// r_j, 1-based; 0 beyond the support.
  std::int64_t entry(unsigned j) const {
    return (j >= 1 && j <= entries_.size()) ? entries_[j - 1] : 0;
  }

  /// |R| = sum r_j (p^j - 1)/(p - 1)
  std::int64_t degree() const;
  /// ||R|| = sum r_j p^(j-1)
  std::int64_t weight() const;
  /// e(R) = sum r_j
  std::int64_t excess() const;

  /// Exponentwise sum.
  ExponentSeq operator+(const ExponentSeq& o) const;

  /// Right-lexicographic comparison: the highest index where the sequences
  /// differ decides.
  bool rlex_less(const ExponentSeq& o) const;

  friend bool operator==(const ExponentSeq& a, const ExponentSeq& b) {
    return a.prime_ == b.prime_ && a.entries_ == b.entries_;
  }

  /// "(3,1)"; the empty sequence renders as "()".
  std::string tuple_text() const;
  /// "xi1^3 xi2"; the empty monomial renders as "1".
  std::string monomial_text() const;
  static ExponentSeq parse_tuple(Prime p, const std::string& text);
  static ExponentSeq parse_monomial(Prime p, const std::string& text);

 private:
  Prime prime_;
  std::vector<std::int64_t> entries_;
};

/// All R with degree(R) = n, in right-lexicographic descending order.
/// Only generators xi_j with (p^j - 1)/(p - 1) <= n occur.
std::vector<ExponentSeq> enumerate_monomials(std::int64_t n, Prime p);

}  // namespace steenrod
