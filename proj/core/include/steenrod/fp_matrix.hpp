#pragma once

#include <cstddef>
#include <vector>

#include "steenrod/fp.hpp"

namespace steenrod {

/// Dense matrix over F_p. Entries are canonical representatives in [0, p).
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, Prime p);

  static FpMatrix identity(std::size_t n, Prime p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Prime prime() const { return prime_; }

  std::int64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { data_[i * cols_ + j] = prime_.reduce(v); }

  FpMatrix operator*(const FpMatrix& o) const;
  std::vector<std::int64_t> mul_vector(const std::vector<std::int64_t>& v) const;

  /// Columns restricted to the given index set, in the given order.
  FpMatrix select_columns(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  friend bool operator==(const FpMatrix&, const FpMatrix&);

 private:
  std::size_t rows_, cols_;
  Prime prime_;
  std::vector<std::int64_t> data_;
};

struct RrefResult {
  FpMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form by Gauss-Jordan elimination over F_p.
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Basis of the right kernel {v : Mv = 0}. Checks rank-nullity and that
/// each returned vector is annihilated by m.
std::vector<std::vector<std::int64_t>> kernel_basis(const FpMatrix& m);

}  // namespace steenrod
