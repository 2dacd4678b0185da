#pragma once

#include <cstddef>

namespace sigma {

// Resource knobs threaded through the decision procedures. Defaults suit
// interactive use; the CLI exposes each as a flag.
struct Limits {
  std::size_t max_simplices = 1'000'000;  // global simplex cap per complex
  long tietze_budget = 10'000;            // simplification steps for pi1
  int bad_set_vertex_cap = 16;            // subset enumeration bound
};

}  // namespace sigma
