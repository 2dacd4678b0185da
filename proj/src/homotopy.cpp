#include "sigma/homotopy.hpp"

#include "sigma/errors.hpp"
#include "sigma/presentation.hpp"

namespace sigma {

TriState pi1_trivial(const FlagComplex& k, long tietze_budget) {
  if (k.max_dim() < 2)
    throw NotMaterializedError("pi1_trivial: dimension 2 not materialized");
  if (k.is_empty() || k.component_count() != 1)
    throw PreconditionError("pi1_trivial requires a nonempty connected complex");

  const HomologyGroup h1 = reduced_homology(k, 1);
  if (!h1.trivial())
    return TriState::no("abelianization is nonzero: H1 = " +
                        homology_to_string(h1));

  const TietzeOutcome outcome =
      tietze_simplify(presentation_from_complex(k), tietze_budget);
  if (outcome.trivial) return TriState::yes();
  return TriState::unknown(outcome.exhausted ? "tietze budget exhausted"
                                             : "tietze simplification stalled");
}

ConnectivityCheck check_k_connected(const FlagComplex& k, int k_level,
                                    const Limits& limits) {
  if (k_level <= -2) return {Tri::yes, {}, std::nullopt};
  if (k_level >= 1 && k.max_dim() < 2)
    throw NotMaterializedError("is_k_connected: dimension 2 not materialized");

  if (auto failure = first_acyclicity_failure(k, std::min(k_level, 0))) {
    return {Tri::no, {},
            ConnectivityFailure{failure->degree, failure->reason,
                                failure->homology}};
  }
  if (k_level <= 0) return {Tri::yes, {}, std::nullopt};

  if (auto failure = first_acyclicity_failure(k, k_level)) {
    return {Tri::no, {},
            ConnectivityFailure{failure->degree, failure->reason,
                                failure->homology}};
  }
  // Acyclic through k_level and 1-acyclic in particular, so pi_1 cannot be
  // refuted here; Hurewicz turns triviality of pi_1 into k-connectivity.
  const TriState pi1 = pi1_trivial(k, limits.tietze_budget);
  if (pi1.value == Tri::yes) return {Tri::yes, {}, std::nullopt};
  if (pi1.value == Tri::no)
    return {Tri::no, {},
            ConnectivityFailure{1, "fundamental group is nontrivial",
                                std::nullopt}};
  return {Tri::unknown, "pi_1 undecided: " + pi1.reason, std::nullopt};
}

TriState is_k_connected(const FlagComplex& k, int k_level, const Limits& limits) {
  const ConnectivityCheck check = check_k_connected(k, k_level, limits);
  switch (check.value) {
    case Tri::yes: return TriState::yes();
    case Tri::no: return TriState::no(check.failure ? check.failure->reason : "");
    default: return TriState::unknown(check.reason);
  }
}

}  // namespace sigma
