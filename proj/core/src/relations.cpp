#include "steenrod/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace steenrod {

bool RelationSpec::is_valid(Prime p) const {
  return l >= 0 && p.value() * l - alpha(l, p) < (p.value() - 1) * n;
}

std::int64_t l_of_n(std::int64_t n, Prime p) {
  if (n < 0) throw std::domain_error("l_of_n: negative degree");
  std::int64_t best = -1;
  for (std::int64_t j = 0; j <= n; ++j)
    if (p.value() * j - alpha(j, p) < (p.value() - 1) * n) best = j;
  return best;
}

std::vector<std::int64_t> bm_vector(const RelationSpec& spec, Prime p) {
  if (spec.l < 0) throw std::invalid_argument("bm_vector: l must be nonnegative");
  std::vector<std::int64_t> v(static_cast<std::size_t>(spec.n + 1), 0);
  for (std::int64_t i = 0; i <= spec.n; ++i)
    v[static_cast<std::size_t>(i)] = binom_mod_p(spec.k - i, spec.l, p).value();
  return v;
}

BmResult verify_bm(std::int64_t n, std::int64_t l, std::int64_t k, Prime p) {
  RelationSpec spec{n, l, k};
  auto residual = mu_matrix(n, p).mul_vector(bm_vector(spec, p));
  bool zero = std::all_of(residual.begin(), residual.end(), [](std::int64_t x) { return x == 0; });
  if (!spec.is_valid(p)) return {BmStatus::hypothesis_not_met, std::move(residual)};
  return {zero ? BmStatus::pass : BmStatus::fail, std::move(residual)};
}

bool kernel_certificate(std::int64_t n, std::int64_t m, Prime p) {
  if (n < 1) throw std::invalid_argument("kernel_certificate: n must be >= 1");
  std::int64_t l = l_of_n(n, p);
  FpMatrix mu = mu_matrix(n, p);

  FpMatrix window(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(l + 1), p);
  for (std::int64_t k = m; k <= m + l; ++k) {
    auto v = bm_vector({n, l, k}, p);
    auto mv = mu.mul_vector(v);
    if (!std::all_of(mv.begin(), mv.end(), [](std::int64_t x) { return x == 0; })) return false;
    for (std::int64_t i = 0; i <= n; ++i)
      window.set(static_cast<std::size_t>(i), static_cast<std::size_t>(k - m), v[i]);
  }
  if (rank(window) != static_cast<std::size_t>(l + 1)) return false;
  return kernel_basis(mu).size() == static_cast<std::size_t>(l + 1);
}

bool vn_basis_certificate(std::int64_t n, Prime p) {
  if (n < 0) throw std::invalid_argument("vn_basis_certificate: negative degree");
  std::int64_t l = l_of_n(n, p);
  FpMatrix mu = mu_matrix(n, p);
  std::vector<std::size_t> tail;
  for (std::int64_t i = l + 1; i <= n; ++i) tail.push_back(static_cast<std::size_t>(i));
  if (rank(mu.select_columns(tail)) != tail.size()) return false;
  return rank(mu) == static_cast<std::size_t>(n - l);
}

namespace {

Prime p2() { return Prime(2); }

// chi Sq^m as an OpVector, with negative superscripts contributing nothing.
std::optional<OpVector> chi_sq(std::int64_t m) {
  if (m < 0) return std::nullopt;
  return chi_Pn_dual(m, p2());
}

OpVector sq_chi_sq(std::int64_t a, std::int64_t b, std::int64_t degree) {
  auto chi = chi_sq(b);
  if (a < 0 || !chi) return OpVector(degree, p2());
  return compose_left_Pi(a, *chi);
}

}  // namespace

bool davis_check(std::int64_t r) {
  if (r < 2) throw std::invalid_argument("davis_check: requires r >= 2");
  std::int64_t h = std::int64_t{1} << (r - 1);  // 2^(r-1)

  std::int64_t n1 = 2 * h - 1;
  bool one = chi_Pn_dual(n1, p2()) == sq_chi_sq(h, h - 1, n1);

  std::int64_t n2 = 2 * h - r - 1;
  OpVector rhs = sq_chi_sq(h - 1, h - r, n2) + sq_chi_sq(h, h - r - 1, n2);
  bool two = chi_Pn_dual(n2, p2()) == rhs;

  return one && two;
}

bool straffin_check(std::int64_t r, std::int64_t b) {
  if (r < 0 || b < 2) throw std::invalid_argument("straffin_check: requires r >= 0, b >= 2");
  std::int64_t step = std::int64_t{1} << r;
  std::int64_t n = step * b;
  OpVector sum(n, p2());
  for (std::int64_t i = 0; i <= b; ++i)
    sum = sum + sq_chi_sq(step * i, step * (b - i), n);
  return sum.is_zero();
}

BigIntMatrix toeplitz_a(std::int64_t l, std::int64_t m) {
  if (l < 0) throw std::invalid_argument("toeplitz_a: l must be nonnegative");
  BigIntMatrix a(static_cast<std::size_t>(l + 1));
  for (std::int64_t i = 0; i <= l; ++i)
    for (std::int64_t j = 0; j <= l; ++j)
      a.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), binom_int(m + j - i, l));
  return a;
}

BigIntMatrix toeplitz_b(std::int64_t l) {
  if (l < 0) throw std::invalid_argument("toeplitz_b: l must be nonnegative");
  BigIntMatrix b(static_cast<std::size_t>(l + 1));
  for (std::int64_t j = 0; j <= l; ++j) {
    BigInt e = binom_int(l + 1, j + 1);
    b.set(0, static_cast<std::size_t>(j), (j % 2 == 0) ? e : -e);
  }
  for (std::int64_t i = 1; i <= l; ++i)
    b.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1), 1);
  return b;
}

bool toeplitz_certificate(std::int64_t l, std::int64_t m) {
  if (det_exact(toeplitz_a(l, m)) != 1) return false;
  return toeplitz_b(l) * toeplitz_a(l, m) == toeplitz_a(l, m + 1);
}

}  // namespace steenrod
