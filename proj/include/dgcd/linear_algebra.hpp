#pragma once

#include <cstddef>
#include <vector>

#include "dgcd/rational.hpp"

namespace dgcd {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<BigRational> data_;
};

/// Basis of the right kernel {v : A v = 0}, one vector per free column of the
/// reduced row echelon form, in increasing order of that column. Each basis
/// vector has a 1 at its free column and zeros at every later free column.
std::vector<std::vector<BigRational>> kernel_basis(RationalMatrix a);

std::size_t rank(RationalMatrix a);

}  // namespace dgcd
