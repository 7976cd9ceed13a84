#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "steenrod/exponent_seq.hpp"

namespace steenrod {

/// Checks the extremal-sequence conditions: every entry lies in [0, p], and
/// an entry equal to p forces all earlier entries to be 0.
bool satisfies_m_conditions(const ExponentSeq& r);

/// The right-lexicographically maximal degree-n sequence, built greedily
/// from the highest admissible generator downward. Satisfies the extremal
/// conditions and has weight l(n) + 1. Memoized per (n, p).
ExponentSeq construct_M(std::int64_t n, Prime p);

/// One degree-preserving, right-lex-increasing repair step toward the
/// extremal conditions; applies the lowest-index applicable move. Returns
/// the input unchanged when the conditions already hold.
ExponentSeq apply_one_move(const ExponentSeq& r);

/// Repairs until the extremal conditions hold. Terminates because every
/// move strictly increases the right-lex order within the finite set of
/// degree-n sequences.
ExponentSeq apply_moves(const ExponentSeq& r);

/// Exhaustively enumerates degree-n sequences and asserts that exactly one
/// satisfies the extremal conditions, equal to construct_M(n, p).
bool m_uniqueness_check(std::int64_t n, Prime p);

/// Degree-n sequences R_{n,j} with weight j, for j = l(n)+1 .. n, from
/// the recursion R_{n,j} = (1,0,0,...) + R_{n-1,j-1} based at R_{n,l(n)+1} = M.
class RTable {
 public:
  RTable(std::int64_t n, Prime p);

  std::int64_t degree() const { return n_; }
  std::int64_t min_weight() const { return min_weight_; }
  std::int64_t max_weight() const { return n_; }
  const ExponentSeq& at_weight(std::int64_t j) const;

 private:
  std::int64_t n_;
  std::int64_t min_weight_;
  std::vector<ExponentSeq> entries_;  // index j - min_weight_
};

RTable build_r_table(std::int64_t n, Prime p);

/// Certifies that every table entry with weight w pairs to a unit against
/// P^w chi P^(n-w) and to zero against P^i chi P^(n-i) for all i > w.
bool triangularity_certificate(std::int64_t n, Prime p);

/// l(n+1) >= l(n) for all 0 <= n < nmax.
bool l_monotonicity_check(std::int64_t nmax, Prime p);

}  // namespace steenrod
