#pragma once

#include <vector>

#include "sigma/flag_complex.hpp"
#include "sigma/numeric.hpp"

namespace sigma {

// Dense matrix over arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  const std::vector<Int>& entries() const { return entries_; }

  bool operator==(const IntegerMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> entries_;
};

// Boundary map of the augmented chain complex of k in degree i >= 0. Rows
// are the (i-1)-simplices, columns the i-simplices, both in canonical
// order; in degree 0 the single row is the augmentation onto the empty
// simplex. Face signs alternate with the omitted vertex position.
IntegerMatrix boundary_matrix(const FlagComplex& k, int i);

}  // namespace sigma
