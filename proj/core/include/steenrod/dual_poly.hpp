#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steenrod/exponent_seq.hpp"

namespace steenrod {

struct RlexLess {
  bool operator()(const ExponentSeq& a, const ExponentSeq& b) const { return a.rlex_less(b); }
};

/// Sparse F_p-linear combination of dual monomials: an element of
/// F_p[xi_1, xi_2, ...]. Zero coefficients are never stored.
class DualPoly {
 public:
  explicit DualPoly(Prime p) : prime_(p) {}

  static DualPoly one(Prime p) { return monomial(ExponentSeq(p, {}), 1); }
  static DualPoly monomial(const ExponentSeq& r, std::int64_t coeff = 1);
  /// The generator xi_k.
  static DualPoly xi(unsigned k, Prime p);

  Prime prime() const { return prime_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExponentSeq, std::int64_t, RlexLess>& terms() const { return terms_; }

  /// Coefficient of xi^R, canonical in [0, p).
  std::int64_t coeff(const ExponentSeq& r) const;

  void add_term(const ExponentSeq& r, std::int64_t coeff);

  DualPoly operator+(const DualPoly& o) const;
  DualPoly operator-(const DualPoly& o) const;
  DualPoly operator*(const DualPoly& o) const;
  DualPoly operator-() const;
  DualPoly scaled(std::int64_t c) const;
  DualPoly pow(std::int64_t e) const;

  friend bool operator==(const DualPoly& a, const DualPoly& b) {
    return a.prime_ == b.prime_ && a.terms_ == b.terms_;
  }

  /// True when every stored monomial has the same degree; degree() then
  /// reports it (degree of the zero polynomial is 0 by convention).
  bool is_homogeneous() const;
  std::int64_t degree() const;

  std::string text() const;

 private:
  Prime prime_;
  std::map<ExponentSeq, std::int64_t, RlexLess> terms_;
};

/// chi(xi_k), from the recursion chi xi_k = -sum_{0<=j<k} xi_{k-j}^(p^j) chi xi_j
/// with chi xi_0 = 1. Memoized per (k, p); thread-safe.
DualPoly antipode_xi(unsigned k, Prime p);

/// The antipode extended multiplicatively over F_p[xi_1, xi_2, ...].
DualPoly antipode(const DualPoly& x);

/// The component of the diagonal of xi^R whose left tensor factor is exactly
/// xi_1^i, returned as the right factor. Each copy of xi_k contributes either
/// (1 | xi_k) or (xi_1^(p^(k-1)) | xi_{k-1}); terms whose left factor involves
/// xi_j with j >= 2 cannot multiply to a pure xi_1 power and are pruned.
DualPoly diagonal_left_xi1(const ExponentSeq& r, std::int64_t i);

}  // namespace steenrod
