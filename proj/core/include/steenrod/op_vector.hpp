#pragma once

#include <cstdint>
#include <vector>

#include "steenrod/dual_poly.hpp"
#include "steenrod/fp_matrix.hpp"

#include <nlohmann/json.hpp>

namespace steenrod {

/// The canonical basis of dual monomials in degree n, memoized per (n, p).
const std::vector<ExponentSeq>& monomial_basis(std::int64_t n, Prime p);

/// Index of R within monomial_basis(degree(R), p).
std::size_t monomial_index(const ExponentSeq& r);

/// An element of P^n represented by its pairings against every degree-n
/// dual monomial, in canonical basis order.
class OpVector {
 public:
  OpVector(std::int64_t degree, Prime p);
  OpVector(std::int64_t degree, Prime p, std::vector<std::int64_t> coeffs);

  std::int64_t degree() const { return degree_; }
  Prime prime() const { return prime_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /// The pairing against xi^R.
  std::int64_t pairing(const ExponentSeq& r) const;
  void set(std::size_t idx, std::int64_t v) { coeffs_[idx] = prime_.reduce(v); }

  OpVector operator+(const OpVector& o) const;
  OpVector operator-() const;
  OpVector scaled(std::int64_t c) const;
  bool is_zero() const;

  friend bool operator==(const OpVector& a, const OpVector& b) {
    return a.degree_ == b.degree_ && a.prime_ == b.prime_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::int64_t degree_;
  Prime prime_;
  std::vector<std::int64_t> coeffs_;
};

nlohmann::json to_json(const OpVector& v);

/// P^n: pairs to 1 against xi_1^n and to 0 against every other monomial.
OpVector op_Pn(std::int64_t n, Prime p);

/// chi P^n via the dual: <chi P^n, xi^R> is the coefficient of xi_1^n in
/// antipode(xi^R). Memoized per (n, p).
OpVector chi_Pn_dual(std::int64_t n, Prime p);

/// Left composition with P^i through the restricted diagonal:
/// <P^i theta, xi^R> = sum_S coeff_S(diagonal_left_xi1(R, i)) <theta, xi^S>.
OpVector compose_left_Pi(std::int64_t i, const OpVector& theta);

/// chi P^n from the defining relation: -sum_{i=1..n} P^i chi P^(n-i).
/// Memoized per (n, p); an independent route from chi_Pn_dual.
OpVector chi_Pn_inductive(std::int64_t n, Prime p);

/// P^i chi P^(n-i), 0 <= i <= n.
OpVector op_Pi_chi_Pnmi(std::int64_t i, std::int64_t n, Prime p);

/// Matrix of the map mu: F_p^(n+1) -> P^n, e_i |-> P^i chi P^(n-i);
/// one row per degree-n monomial, column i holds op_Pi_chi_Pnmi(i, n).
FpMatrix mu_matrix(std::int64_t n, Prime p);

}  // namespace steenrod
