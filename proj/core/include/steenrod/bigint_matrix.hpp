#pragma once

#include <cstddef>
#include <vector>

#include "steenrod/fp.hpp"

namespace steenrod {

/// Square matrix of arbitrary-precision integers.
class BigIntMatrix {
 public:
  explicit BigIntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, BigInt v) { data_[i * n_ + j] = std::move(v); }

  BigIntMatrix operator*(const BigIntMatrix& o) const;
  friend bool operator==(const BigIntMatrix&, const BigIntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination, cross-checked
/// against modular Gaussian determinants for two primes. A mismatch between
/// the routes is a hard internal error.
BigInt det_exact(const BigIntMatrix& m);

}  // namespace steenrod
