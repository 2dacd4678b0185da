#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigma/flag_complex.hpp"
#include "sigma/numeric.hpp"

namespace sigma {

// Finitely generated abelian group in canonical form: free rank plus a
// divisibility chain of torsion orders (each > 1).
struct HomologyGroup {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& other) const = default;
};

std::string homology_to_string(const HomologyGroup& h);

enum class Tri { yes, no, unknown };

std::string tri_to_string(Tri t);

// Three-valued answer; unknowns always carry a reason.
struct TriState {
  Tri value = Tri::unknown;
  std::string reason;

  static TriState yes() { return {Tri::yes, {}}; }
  static TriState no(std::string why = {}) { return {Tri::no, std::move(why)}; }
  static TriState unknown(std::string why) { return {Tri::unknown, std::move(why)}; }
};

// Reduced homology of k in degree i >= -1, from Smith normal forms of the
// augmented boundary maps. H~_{-1} = Z exactly for the empty complex.
HomologyGroup reduced_homology(const FlagComplex& k, int i);

// k_level <= -2: vacuously true. k_level = -1: nonempty. k_level >= 0:
// nonempty with vanishing reduced homology through degree k_level.
bool is_k_acyclic(const FlagComplex& k, int k_level);

// Smallest failing degree behind is_k_acyclic, with evidence: degree -1
// carries "empty", degree 0 "disconnected", degree >= 1 the nonzero group.
struct AcyclicityFailure {
  int degree = 0;
  std::string reason;
  std::optional<HomologyGroup> homology;
};

std::optional<AcyclicityFailure> first_acyclicity_failure(const FlagComplex& k,
                                                          int k_level);

}  // namespace sigma
