#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigma/character.hpp"
#include "sigma/flag_complex.hpp"
#include "sigma/homology.hpp"
#include "sigma/limits.hpp"

namespace sigma {

enum class Variant { homological, homotopical };

std::string variant_to_string(Variant v);

// Replayable evidence for a No verdict: the dead simplex whose living link
// misses the required connectivity/acyclicity level, the degree that
// failed, and either the nonzero homology group or a combinatorial reason
// (empty / disconnected).
struct DeadSimplexFailure {
  Simplex sigma;
  int required_level = 0;
  int failing_index = 0;
  std::optional<HomologyGroup> homology;
  std::string reason;
};

// Outcome of a membership query. No carries a witness; Unknown carries a
// reason. The bb sweep additionally stamps the critical value.
struct Verdict {
  Tri value = Tri::unknown;
  int n = 0;
  Variant variant = Variant::homological;
  std::optional<DeadSimplexFailure> witness;
  std::optional<Rational> critical_t;
  std::string reason;
  std::vector<std::string> notes;
};

// Subcomplex spanned by the vertices with nonzero weight.
FlagComplex living_subcomplex(const FlagComplex& delta, const RaagCharacter& mu);

// The empty simplex plus every simplex of dimension <= n-1 all of whose
// vertices are dead, in canonical order. delta must be materialized to
// dimension >= n-1.
std::vector<Simplex> dead_simplices(const FlagComplex& delta,
                                    const RaagCharacter& mu, int n);

// Membership of [mu] in Sigma^n of the right-angled Artin group of g, by
// the living-link criterion: Yes iff for every dead simplex s the living
// part of its link is (n - dim s - 2)-acyclic (homological variant) resp.
// -connected (homotopical variant).
Verdict raag_sigma(const Graph& g, const RaagCharacter& mu, int n,
                   Variant variant, const Limits& limits = {});

// Closed form for products of rank-2 free groups: membership in Sigma^n
// holds iff the character is nonzero on at least n+1 factors.
bool multipartite_oracle(int parts, int nonzero_parts, int n);

}  // namespace sigma
