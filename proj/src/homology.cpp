#include "sigma/homology.hpp"

#include <stdexcept>

#include "sigma/errors.hpp"
#include "sigma/matrix.hpp"
#include "sigma/snf.hpp"

namespace sigma {

std::string homology_to_string(const HomologyGroup& h) {
  if (h.trivial()) return "0";
  std::string out;
  if (h.free_rank == 1) out = "Z";
  else if (h.free_rank > 1) out = "Z^" + std::to_string(h.free_rank);
  for (const Int& t : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out;
}

std::string tri_to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

HomologyGroup reduced_homology(const FlagComplex& k, int i) {
  if (i < -1)
    throw std::invalid_argument("reduced_homology: degree must be >= -1");
  if (k.max_dim() < i + 1)
    throw NotMaterializedError("reduced_homology: dimension " +
                               std::to_string(i + 1) + " not materialized");
  if (i == -1) return HomologyGroup{k.is_empty() ? 1L : 0L, {}};

  const long ci = static_cast<long>(k.simplex_count(i));
  if (ci == 0) return HomologyGroup{};
  const SnfResult below = smith_normal_form(boundary_matrix(k, i));
  const SnfResult above = smith_normal_form(boundary_matrix(k, i + 1));
  HomologyGroup h;
  h.free_rank = ci - below.rank() - above.rank();
  for (const Int& f : above.invariant_factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

std::optional<AcyclicityFailure> first_acyclicity_failure(const FlagComplex& k,
                                                          int k_level) {
  if (k_level <= -2) return std::nullopt;
  if (k.max_dim() < k_level + 1)
    throw NotMaterializedError("is_k_acyclic: dimension " +
                               std::to_string(k_level + 1) +
                               " not materialized");
  if (k.is_empty())
    return AcyclicityFailure{-1, "complex is empty", std::nullopt};
  if (k_level == -1) return std::nullopt;
  const int components = k.component_count();
  if (components != 1)
    return AcyclicityFailure{
        0, "complex is disconnected (" + std::to_string(components) +
               " components)",
        HomologyGroup{components - 1, {}}};
  for (int i = 1; i <= k_level; ++i) {
    HomologyGroup h = reduced_homology(k, i);
    if (!h.trivial())
      return AcyclicityFailure{i, "nonzero reduced homology in degree " +
                                      std::to_string(i),
                               std::move(h)};
  }
  return std::nullopt;
}

bool is_k_acyclic(const FlagComplex& k, int k_level) {
  return !first_acyclicity_failure(k, k_level).has_value();
}

}  // namespace sigma
