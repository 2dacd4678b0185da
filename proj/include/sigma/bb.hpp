#pragma once

#include <optional>

#include "sigma/character.hpp"
#include "sigma/homology.hpp"
#include "sigma/limits.hpp"
#include "sigma/raag.hpp"

namespace sigma {

// Finiteness type of the Bestvina-Brady group: FP_n holds iff the flag
// complex is (n-1)-acyclic, F_n iff it is (n-1)-connected. The graph must
// be nonempty and connected.
TriState bb_finiteness(const Graph& g, int n, Variant variant,
                       const Limits& limits = {});

// Membership of [chi] in Sigma^n of the Bestvina-Brady group, decided by
// sweeping the extension family over the critical shifts and running the
// ambient membership test on each extension. Precondition: bb_finiteness
// at the same level answers Yes.
Verdict bb_sigma(const Graph& g, const BBCharacter& chi, int n, Variant variant,
                 const Limits& limits = {});

// Sufficient condition for wreath-type characters: nonzero restriction to
// at least n+1 coordinate subgroups certifies membership. False is
// inconclusive, not a refutation.
bool wreath_sufficient(int n, int support_count);

// Membership prediction for a direct product from the factors' maximal
// membership levels; nullopt encodes a zero restriction. Both zero is an
// error (the character would be trivial).
bool product_formula_predict(std::optional<int> level1,
                             std::optional<int> level2, int n);

}  // namespace sigma
