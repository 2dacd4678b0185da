#pragma once

#include <vector>

#include "sigma/matrix.hpp"
#include "sigma/numeric.hpp"

namespace sigma {

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all
// positive, units included. r is the rank.
struct SnfResult {
  std::vector<Int> invariant_factors;

  int rank() const { return static_cast<int>(invariant_factors.size()); }
};

// Exact Smith normal form by row/column reduction with minimal-absolute-
// value pivoting. Arbitrary precision throughout; no modular shortcuts.
SnfResult smith_normal_form(const IntegerMatrix& m);

}  // namespace sigma
