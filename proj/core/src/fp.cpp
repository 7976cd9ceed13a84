#include "steenrod/fp.hpp"

namespace steenrod {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Prime::Prime(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("Prime: " + std::to_string(p) + " is not prime");
}

std::int64_t Prime::reduce(const BigInt& x) const {
  BigInt r = x % p_;
  if (r < 0) r += p_;
  return static_cast<std::int64_t>(r);
}

std::int64_t Prime::inv(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("Prime::inv: zero is not invertible");
  // Fermat: a^(p-2) mod p.
  std::int64_t result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::int64_t alpha(std::int64_t n, Prime p) {
  if (n < 0) throw std::domain_error("alpha: negative argument");
  std::int64_t s = 0;
  for (; n > 0; n /= p.value()) s += n % p.value();
  return s;
}

BigInt binom_int(std::int64_t m, std::int64_t l) {
  if (l < 0) return 0;
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= l; ++i) {
    acc *= (m - i + 1);
    acc /= i;  // exact: the running value is binom_int(m, i)
  }
  return acc;
}

namespace {

// C(a, b) mod p for a, b >= 0 by Lucas' theorem.
std::int64_t lucas(std::int64_t a, std::int64_t b, Prime p) {
  std::int64_t result = 1;
  while (b > 0) {
    std::int64_t ad = a % p.value(), bd = b % p.value();
    if (bd > ad) return 0;
    result = p.mul(result, p.reduce(binom_int(ad, bd)));
    a /= p.value();
    b /= p.value();
  }
  return result;
}

}  // namespace

FpScalar binom_mod_p(std::int64_t m, std::int64_t l, Prime p) {
  if (l < 0) return FpScalar(0, p);
  if (m >= 0) return FpScalar(lucas(m, l, p), p);
  // C(m, l) = (-1)^l C(l - m - 1, l)
  std::int64_t v = lucas(l - m - 1, l, p);
  if (l % 2 != 0) v = p.neg(v);
  return FpScalar(v, p);
}

}  // namespace steenrod
