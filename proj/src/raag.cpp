#include "sigma/raag.hpp"

#include <stdexcept>

#include "sigma/errors.hpp"
#include "sigma/homotopy.hpp"

namespace sigma {

std::string variant_to_string(Variant v) {
  return v == Variant::homological ? "homological" : "homotopical";
}

FlagComplex living_subcomplex(const FlagComplex& delta, const RaagCharacter& mu) {
  mu.check_matches(delta.graph());
  Bitset living = mu.support() & delta.present();
  return FlagComplex(delta.graph_ptr(), std::move(living), delta.max_dim());
}

std::vector<Simplex> dead_simplices(const FlagComplex& delta,
                                    const RaagCharacter& mu, int n) {
  if (n < 1) throw std::invalid_argument("dead_simplices: n must be >= 1");
  mu.check_matches(delta.graph());
  if (delta.max_dim() < n - 1)
    throw NotMaterializedError("dead_simplices: dimension " +
                               std::to_string(n - 1) + " not materialized");
  std::vector<Simplex> out;
  out.push_back(Simplex{});
  for (int d = 0; d <= n - 1; ++d) {
    for (const Simplex& s : delta.simplices(d)) {
      bool all_dead = true;
      for (const int v : s.verts)
        if (mu.is_living(v)) {
          all_dead = false;
          break;
        }
      if (all_dead) out.push_back(s);
    }
  }
  return out;
}

Verdict raag_sigma(const Graph& g, const RaagCharacter& mu, int n,
                   Variant variant, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("raag_sigma: n must be >= 1");
  if (g.vertex_count() == 0)
    throw ValidationError("raag_sigma: the graph has no vertices");
  mu.check_matches(g);

  auto shared = std::make_shared<const Graph>(g);
  const FlagComplex delta(shared, shared->all_vertices(), n, limits);
  const std::vector<Simplex> dead = dead_simplices(delta, mu, n);

  Verdict verdict;
  verdict.value = Tri::yes;
  verdict.n = n;
  verdict.variant = variant;
  if (g.component_count() != 1)
    verdict.notes.push_back(
        "graph is disconnected; verdict applies to the full right-angled "
        "Artin group");

  std::string first_unknown;
  for (const Simplex& s : dead) {
    const int level = n - s.dim() - 2;
    // The living part of the link of s, materialized just deep enough for
    // the level check. Equals full_subcomplex(link(delta, s), living).
    Bitset candidates = delta.present();
    for (const int u : s.verts) candidates &= g.neighbors(u);
    candidates &= mu.support();
    const FlagComplex living_link(shared, std::move(candidates),
                                  std::max(level + 1, 0), limits);

    if (variant == Variant::homological) {
      if (auto failure = first_acyclicity_failure(living_link, level)) {
        verdict.value = Tri::no;
        verdict.witness = DeadSimplexFailure{s, level, failure->degree,
                                             failure->homology, failure->reason};
        return verdict;
      }
    } else {
      const ConnectivityCheck check = check_k_connected(living_link, level, limits);
      if (check.value == Tri::no) {
        verdict.value = Tri::no;
        verdict.witness =
            DeadSimplexFailure{s, level, check.failure->degree,
                               check.failure->homology, check.failure->reason};
        return verdict;
      }
      if (check.value == Tri::unknown && first_unknown.empty())
        first_unknown = "dead simplex of dimension " + std::to_string(s.dim()) +
                        ": " + check.reason;
    }
  }

  if (!first_unknown.empty()) {
    verdict.value = Tri::unknown;
    verdict.reason = first_unknown;
  }
  return verdict;
}

bool multipartite_oracle(int parts, int nonzero_parts, int n) {
  if (parts < 1)
    throw std::invalid_argument("multipartite_oracle: need at least one part");
  if (n < 1) throw std::invalid_argument("multipartite_oracle: n must be >= 1");
  if (nonzero_parts < 0 || nonzero_parts > parts)
    throw std::invalid_argument(
        "multipartite_oracle: nonzero part count out of range");
  if (nonzero_parts == 0)
    throw ValidationError("multipartite_oracle: the zero map is not a character");
  return nonzero_parts >= n + 1;
}

}  // namespace sigma
