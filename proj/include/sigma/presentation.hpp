#pragma once

#include <cstddef>
#include <vector>

#include "sigma/flag_complex.hpp"

namespace sigma {

// Finite group presentation. Letters are signed 1-based generator indices:
// +g and -g for generator g and its inverse.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<std::vector<int>> relators;
};

// Edge-path presentation of pi_1 of the 2-skeleton: spanning tree of the
// 1-skeleton (edges collapsed), one generator per non-tree edge, one
// relator per 2-simplex. Requires a nonempty connected complex
// materialized to dimension >= 2.
GroupPresentation presentation_from_complex(const FlagComplex& k);

struct TietzeOutcome {
  bool trivial = false;    // presentation reduced to <empty | empty>
  bool exhausted = false;  // step or length budget ran out
  long steps = 0;
};

// Greedy Tietze simplification: free/cyclic reduction plus elimination of
// generators that occur exactly once in some relator, shortest defining
// relator first. Deterministic. A semi-decision: !trivial does not mean
// the group is nontrivial.
TietzeOutcome tietze_simplify(GroupPresentation presentation, long step_budget,
                              std::size_t length_cap = std::size_t{1} << 20);

}  // namespace sigma
