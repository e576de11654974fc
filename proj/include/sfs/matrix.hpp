#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sfs/exactq.hpp"

namespace sfs {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Block-diagonal direct sum.
  static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix identity(std::size_t n);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Nonzero diagonal of the Smith normal form, each entry positive and
/// dividing the next. The number of entries is the rank.
std::vector<BigInt> smith_diagonal(IntMatrix m);

BigInt determinant(const IntMatrix& m);

/// Leading principal minors det(M[0..i, 0..i]) for i = 1..n.
std::vector<BigInt> leading_minors(const IntMatrix& m);

}  // namespace sfs
