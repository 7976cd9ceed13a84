#include "steenrod/bigint_matrix.hpp"

#include <stdexcept>

#include "steenrod/fp_matrix.hpp"

namespace steenrod {

BigIntMatrix BigIntMatrix::operator*(const BigIntMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BigIntMatrix: size mismatch");
  BigIntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out.set(i, j, out.at(i, j) + at(i, k) * o.at(k, j));
    }
  return out;
}

namespace {

BigInt det_bareiss(BigIntMatrix m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) {
        BigInt t = m.at(k, j);
        m.set(k, j, m.at(piv, j));
        m.set(piv, j, t);
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.set(i, j, (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev);
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::int64_t det_mod(const BigIntMatrix& m, Prime q) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  FpMatrix f(n, n, q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.set(i, j, q.reduce(m.at(i, j)));
  std::int64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && f.at(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t t = f.at(k, j);
        f.set(k, j, f.at(piv, j));
        f.set(piv, j, t);
      }
      det = q.neg(det);
    }
    det = q.mul(det, f.at(k, k));
    std::int64_t inv = q.inv(f.at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      std::int64_t factor = q.mul(f.at(i, k), inv);
      if (factor == 0) continue;
      for (std::size_t j = k; j < n; ++j)
        f.set(i, j, q.sub(f.at(i, j), q.mul(factor, f.at(k, j))));
    }
  }
  return det;
}

}  // namespace

BigInt det_exact(const BigIntMatrix& m) {
  BigInt d = det_bareiss(m);
  for (std::int64_t qv : {1000003LL, 999983LL}) {
    Prime q(qv);
    if (q.reduce(d) != det_mod(m, q))
      throw std::logic_error("det_exact: Bareiss and modular determinants disagree");
  }
  return d;
}

}  // namespace steenrod
