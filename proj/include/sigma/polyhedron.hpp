#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sigma/character.hpp"
#include "sigma/graph.hpp"
#include "sigma/limits.hpp"

namespace sigma {

// A set of vertices whose removal breaks the living part: the rest is
// empty, disconnected, or fails to dominate some removed vertex.
struct BadSet {
  std::vector<int> vertices;

  bool operator==(const BadSet& other) const = default;
};

bool is_bad_set(const Graph& g, const Bitset& d);

// Inclusion-minimal bad sets, by increasing size then lexicographically.
// Enumeration prunes supersets of found sets, which is sound because
// badness is monotone under enlargement (verified separately by an
// exhaustive oracle in the test suite).
std::vector<BadSet> minimal_bad_sets(const Graph& g, const Limits& limits = {});

// Conjunction of equations c(u) = c(v), stored transitively closed.
struct EqualitySystem {
  std::vector<std::pair<int, int>> equations;

  bool operator==(const EqualitySystem& other) const = default;
};

// Union of equality systems on the character sphere.
struct SpherePolyhedron {
  int vertex_count = 0;
  std::vector<EqualitySystem> systems;

  bool operator==(const SpherePolyhedron& other) const = default;
};

// The complement of Sigma^1 of the Bestvina-Brady group as a rational
// spherical polyhedron: one system per minimal bad set D, equating all
// weights on D. A singleton D yields the empty system (whole sphere).
SpherePolyhedron sigma1_complement(const Graph& g, const Limits& limits = {});

bool polyhedron_contains(const SpherePolyhedron& p, const BBCharacter& chi);

nlohmann::json polyhedron_to_json(const SpherePolyhedron& p, const Graph& g);

namespace detail {

// Badness scan over all size-k subsets not containing a found minimal set;
// masks are bit-coded vertex sets. Both variants return identical flags.
std::vector<char> scan_bad_sets_serial(const Graph& g,
                                       const std::vector<std::uint32_t>& masks,
                                       const std::vector<std::uint32_t>& found);
std::vector<char> scan_bad_sets_parallel(
    const Graph& g, const std::vector<std::uint32_t>& masks,
    const std::vector<std::uint32_t>& found);

}  // namespace detail

}  // namespace sigma
