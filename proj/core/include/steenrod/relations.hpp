#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steenrod/bigint_matrix.hpp"
#include "steenrod/op_vector.hpp"

namespace steenrod {

/// Names the relation vector sum_i C(k-i, l) e_i in degree n.
struct RelationSpec {
  std::int64_t n;
  std::int64_t l;
  std::int64_t k;

  /// Hypothesis p*l - alpha(l) < (p-1)*n.
  bool is_valid(Prime p) const;
};

/// l(n) = max{j : p*j - alpha(j) < (p-1)*n}, by ascending scan over j <= n
/// (p*j - alpha(j) >= (p-1)*j bounds the scan). Returns -1 for n = 0, where
/// the defining set is empty.
std::int64_t l_of_n(std::int64_t n, Prime p);

/// Coordinates (binom(k-i, l) mod p) for 0 <= i <= n.
std::vector<std::int64_t> bm_vector(const RelationSpec& spec, Prime p);

enum class BmStatus { pass, fail, hypothesis_not_met };

struct BmResult {
  BmStatus status;
  /// mu_matrix(n) applied to the relation vector; zero iff the relation holds.
  std::vector<std::int64_t> residual;
};

/// Checks that the relation vector lies in ker(mu). Specs failing the
/// hypothesis report hypothesis_not_met with the observed residual.
BmResult verify_bm(std::int64_t n, std::int64_t l, std::int64_t k, Prime p);

/// Certifies that the l(n)+1 relation vectors with k in [m, m+l(n)] are
/// independent, lie in ker(mu), and span it: dim ker(mu) = l(n)+1.
bool kernel_certificate(std::int64_t n, std::int64_t m, Prime p);

/// Certifies that columns l(n)+1..n of mu are independent and that
/// rank(mu) = n - l(n).
bool vn_basis_certificate(std::int64_t n, Prime p);

/// The two efficient-computation identities for chi Sq at p = 2:
///   chi Sq^(2^r-1)   = Sq^(2^(r-1)) chi Sq^(2^(r-1)-1)
///   chi Sq^(2^r-r-1) = Sq^(2^(r-1)-1) chi Sq^(2^(r-1)-r)
///                    + Sq^(2^(r-1))   chi Sq^(2^(r-1)-r-1)
/// Terms with a negative superscript vanish. Requires r >= 2.
bool davis_check(std::int64_t r);

/// sum_i Sq^(2^r i) chi Sq^(2^r (b-i)) = 0 at p = 2; requires r >= 0, b >= 2.
bool straffin_check(std::int64_t r, std::int64_t b);

/// The (l+1)x(l+1) Toeplitz matrix with (i,j) entry binom(m+j-i, l).
BigIntMatrix toeplitz_a(std::int64_t l, std::int64_t m);
/// The companion-style matrix with first row (-1)^(j) binom(l+1, j+1) and a
/// shifted identity below; satisfies B * A_l(m) = A_l(m+1).
BigIntMatrix toeplitz_b(std::int64_t l);

/// det A_l(m) = 1 and B * A_l(m) = A_l(m+1), both exactly.
bool toeplitz_certificate(std::int64_t l, std::int64_t m);

}  // namespace steenrod
