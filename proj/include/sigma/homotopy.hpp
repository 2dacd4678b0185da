#pragma once

#include <optional>
#include <string>

#include "sigma/homology.hpp"
#include "sigma/limits.hpp"

namespace sigma {

// Semi-decides triviality of pi_1 of the 2-skeleton. Yes when the
// edge-path presentation simplifies to the trivial one within the budget;
// No when H~_1 is nonzero; Unknown otherwise.
TriState pi1_trivial(const FlagComplex& k, long tietze_budget = Limits{}.tietze_budget);

// Evidence for a connectivity verdict. degree -1: empty, 0: disconnected,
// i >= 1: nonzero reduced homology in degree i (group attached).
struct ConnectivityFailure {
  int degree = 0;
  std::string reason;
  std::optional<HomologyGroup> homology;
};

struct ConnectivityCheck {
  Tri value = Tri::unknown;
  std::string reason;  // set when value is unknown
  std::optional<ConnectivityFailure> failure;
};

// k-connectivity via acyclicity plus pi_1 (Hurewicz): never Unknown for
// k_level <= 0.
ConnectivityCheck check_k_connected(const FlagComplex& k, int k_level,
                                    const Limits& limits = {});
TriState is_k_connected(const FlagComplex& k, int k_level,
                        const Limits& limits = {});

}  // namespace sigma
