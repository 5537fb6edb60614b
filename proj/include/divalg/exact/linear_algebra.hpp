#pragma once

// Dense exact linear algebra over Q.

#include <optional>
#include <vector>

#include "divalg/rational.hpp"

namespace divalg::exact {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Some solution of m * x = rhs (free variables set to 0), or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(RationalMatrix m, std::vector<Rational> rhs);

int rank(RationalMatrix m);

/// Reduces m to row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(RationalMatrix& m);

}  // namespace divalg::exact
