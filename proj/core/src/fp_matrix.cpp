#include "steenrod/fp_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace steenrod {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Prime p)
    : rows_(rows), cols_(cols), prime_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, Prime p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || !(prime_ == o.prime_))
    throw std::invalid_argument("FpMatrix: incompatible product");
  FpMatrix out(rows_, o.cols_, prime_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.set(i, j, out.at(i, j) + a * o.at(k, j));
    }
  return out;
}

std::vector<std::int64_t> FpMatrix::mul_vector(const std::vector<std::int64_t>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("FpMatrix: vector length mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = prime_.add(s, prime_.mul(at(i, j), prime_.reduce(v[j])));
    out[i] = s;
  }
  return out;
}

FpMatrix FpMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  FpMatrix out(rows_, idx.size(), prime_);
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw std::out_of_range("FpMatrix: column index");
    for (std::size_t i = 0; i < rows_; ++i) out.set(i, j, at(i, idx[j]));
  }
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

bool operator==(const FpMatrix& a, const FpMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.prime_ == b.prime_ && a.data_ == b.data_;
}

RrefResult rref(const FpMatrix& m) {
  FpMatrix r = m;
  Prime p = m.prime();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t piv = row;
    while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        std::int64_t t = r.at(row, j);
        r.set(row, j, r.at(piv, j));
        r.set(piv, j, t);
      }
    std::int64_t inv = p.inv(r.at(row, col));
    for (std::size_t j = 0; j < r.cols(); ++j) r.set(row, j, p.mul(r.at(row, j), inv));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, col) == 0) continue;
      std::int64_t f = r.at(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j)
        r.set(i, j, p.sub(r.at(i, j), p.mul(f, r.at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  std::size_t rk = pivots.size();
  if (rk > std::min(m.rows(), m.cols()))
    throw std::logic_error("rref: rank exceeds matrix dimensions");
  return RrefResult{std::move(r), rk, std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

std::vector<std::vector<std::int64_t>> kernel_basis(const FpMatrix& m) {
  RrefResult r = rref(m);
  Prime p = m.prime();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::int64_t> v(m.cols(), 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = p.neg(r.reduced.at(i, free_col));
    basis.push_back(std::move(v));
  }

  if (r.rank + basis.size() != m.cols())
    throw std::logic_error("kernel_basis: rank-nullity violated");
  for (const auto& v : basis) {
    auto mv = m.mul_vector(v);
    if (!std::all_of(mv.begin(), mv.end(), [](std::int64_t x) { return x == 0; }))
      throw std::logic_error("kernel_basis: vector not in kernel");
  }
  return basis;
}

}  // namespace steenrod
