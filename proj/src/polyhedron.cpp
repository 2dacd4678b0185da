#include "sigma/polyhedron.hpp"

#include <algorithm>

#include "sigma/errors.hpp"
#include "sigma/parallel.hpp"

namespace sigma {

bool is_bad_set(const Graph& g, const Bitset& d) {
  const Bitset living = ~d & g.all_vertices();
  if (living.none()) return true;
  if (g.component_count_within(living) != 1) return true;
  for (std::size_t v = d.find_first(); v != Bitset::npos; v = d.find_next(v))
    if ((g.neighbors(v) & living).none()) return true;
  return false;
}

namespace detail {

namespace {

bool is_bad_mask(const Graph& g, std::uint32_t mask) {
  const int n = g.vertex_count();
  Bitset d(n);
  for (int v = 0; v < n; ++v)
    if (mask & (std::uint32_t{1} << v)) d.set(v);
  return is_bad_set(g, d);
}

bool contains_found(std::uint32_t mask, const std::vector<std::uint32_t>& found) {
  for (const std::uint32_t f : found)
    if ((mask & f) == f) return true;
  return false;
}

}  // namespace

std::vector<char> scan_bad_sets_serial(const Graph& g,
                                       const std::vector<std::uint32_t>& masks,
                                       const std::vector<std::uint32_t>& found) {
  std::vector<char> bad(masks.size(), 0);
  for (std::size_t i = 0; i < masks.size(); ++i)
    if (!contains_found(masks[i], found)) bad[i] = is_bad_mask(g, masks[i]);
  return bad;
}

std::vector<char> scan_bad_sets_parallel(
    const Graph& g, const std::vector<std::uint32_t>& masks,
    const std::vector<std::uint32_t>& found) {
  std::vector<char> bad(masks.size(), 0);
  parallel_for(masks.size(), [&](std::size_t i) {
    if (!contains_found(masks[i], found)) bad[i] = is_bad_mask(g, masks[i]);
  });
  return bad;
}

}  // namespace detail

namespace {

// Size-k subsets of {0, ..., n-1} as masks, in lexicographic order of the
// ascending vertex lists.
std::vector<std::uint32_t> combination_masks(int n, int k) {
  std::vector<std::uint32_t> out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::uint32_t mask = 0;
    for (const int v : pick) mask |= std::uint32_t{1} << v;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<BadSet> minimal_bad_sets(const Graph& g, const Limits& limits) {
  if (g.vertex_count() == 0 || !g.connected())
    throw PreconditionError("minimal bad sets are defined for nonempty "
                            "connected graphs");
  const int n = g.vertex_count();
  if (n > limits.bad_set_vertex_cap)
    throw ResourceCapError("bad-set enumeration is capped at " +
                           std::to_string(limits.bad_set_vertex_cap) +
                           " vertices");

  std::vector<std::uint32_t> found;
  std::vector<BadSet> out;
  for (int size = 1; size < n; ++size) {
    const auto masks = combination_masks(n, size);
    // Any bad set here is minimal: a bad proper subset would have been
    // found at a smaller size (badness is monotone under enlargement).
    const auto bad = masks.size() >= 512
                         ? detail::scan_bad_sets_parallel(g, masks, found)
                         : detail::scan_bad_sets_serial(g, masks, found);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (!bad[i]) continue;
      found.push_back(masks[i]);
      BadSet set;
      for (int v = 0; v < n; ++v)
        if (masks[i] & (std::uint32_t{1} << v)) set.vertices.push_back(v);
      out.push_back(std::move(set));
    }
  }
  return out;
}

SpherePolyhedron sigma1_complement(const Graph& g, const Limits& limits) {
  SpherePolyhedron p;
  p.vertex_count = g.vertex_count();
  for (const BadSet& d : minimal_bad_sets(g, limits)) {
    EqualitySystem system;
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < d.vertices.size(); ++j)
        system.equations.emplace_back(d.vertices[i], d.vertices[j]);
    p.systems.push_back(std::move(system));
  }
  return p;
}

bool polyhedron_contains(const SpherePolyhedron& p, const BBCharacter& chi) {
  if (chi.vertex_count() != p.vertex_count)
    throw ValidationError("polyhedron and character use different vertex sets");
  for (const EqualitySystem& system : p.systems) {
    bool satisfied = true;
    for (const auto& [u, v] : system.equations)
      if (chi.weight(u) != chi.weight(v)) {
        satisfied = false;
        break;
      }
    if (satisfied) return true;
  }
  return false;
}

nlohmann::json polyhedron_to_json(const SpherePolyhedron& p, const Graph& g) {
  nlohmann::json systems = nlohmann::json::array();
  for (const EqualitySystem& system : p.systems) {
    nlohmann::json equations = nlohmann::json::array();
    for (const auto& [u, v] : system.equations)
      equations.push_back({g.name(u), g.name(v)});
    systems.push_back(std::move(equations));
  }
  return nlohmann::json{{"systems", std::move(systems)}};
}

}  // namespace sigma
