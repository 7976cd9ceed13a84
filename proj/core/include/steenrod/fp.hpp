#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace steenrod {

using BigInt = boost::multiprecision::cpp_int;

/// A verified prime modulus. Construction rejects non-primes.
class Prime {
 public:
  explicit Prime(std::int64_t p);

  std::int64_t value() const { return p_; }

  /// Canonical representative of x in [0, p).
  std::int64_t reduce(std::int64_t x) const {
    std::int64_t r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  std::int64_t reduce(const BigInt& x) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::int64_t inv(std::int64_t a) const;

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::int64_t p_;
};

/// Element of F_p, canonical representative with its modulus attached.
class FpScalar {
 public:
  FpScalar(std::int64_t value, Prime p) : value_(p.reduce(value)), prime_(p) {}

  std::int64_t value() const { return value_; }
  Prime prime() const { return prime_; }
  bool is_zero() const { return value_ == 0; }

  FpScalar operator+(const FpScalar& o) const {
    require_same(o);
    return FpScalar(prime_.add(value_, o.value_), prime_);
  }
  FpScalar operator-(const FpScalar& o) const {
    require_same(o);
    return FpScalar(prime_.sub(value_, o.value_), prime_);
  }
  FpScalar operator*(const FpScalar& o) const {
    require_same(o);
    return FpScalar(prime_.mul(value_, o.value_), prime_);
  }
  FpScalar operator-() const { return FpScalar(prime_.neg(value_), prime_); }
  FpScalar inverse() const { return FpScalar(prime_.inv(value_), prime_); }

  friend bool operator==(const FpScalar& a, const FpScalar& b) {
    return a.prime_ == b.prime_ && a.value_ == b.value_;
  }

 private:
  void require_same(const FpScalar& o) const {
    if (!(prime_ == o.prime_)) throw std::invalid_argument("FpScalar: prime mismatch");
  }

  std::int64_t value_;
  Prime prime_;
};

/// Sum of the base-p digits of n. Rejects negative n.
std::int64_t alpha(std::int64_t n, Prime p);

/// Generalized binomial coefficient with integer top:
/// m(m-1)...(m-l+1)/l! for l >= 0, and 0 for l < 0. Exact.
BigInt binom_int(std::int64_t m, std::int64_t l);

/// binom_int(m, l) mod p, computed without dividing by l!:
/// for m >= 0 by Lucas' theorem, for m < 0 via C(m,l) = (-1)^l C(l-m-1, l).
FpScalar binom_mod_p(std::int64_t m, std::int64_t l, Prime p);

}  // namespace steenrod
