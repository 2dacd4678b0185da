#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "sigma/graph.hpp"
#include "sigma/limits.hpp"

namespace sigma {

// A clique of the ambient graph, vertex indices sorted ascending. The
// empty simplex (dimension -1) is a legal value.
struct Simplex {
  std::vector<int> verts;

  int dim() const { return static_cast<int>(verts.size()) - 1; }
  bool is_empty() const { return verts.empty(); }

  bool operator==(const Simplex& other) const = default;
  // Canonical order: by dimension, then lexicographic.
  bool operator<(const Simplex& other) const {
    if (verts.size() != other.verts.size())
      return verts.size() < other.verts.size();
    return verts < other.verts;
  }
};

// Flag complex on a vertex subset of an ambient graph. The complex is
// determined by the graph and the subset; max_dim only bounds which
// simplex lists are materialized. Immutable after construction, safe to
// share across threads.
class FlagComplex {
 public:
  FlagComplex(std::shared_ptr<const Graph> graph, Bitset present, int max_dim,
              const Limits& limits = {});

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const Bitset& present() const { return present_; }
  int max_dim() const { return max_dim_; }

  bool is_empty() const { return present_.none(); }
  std::size_t vertex_count() const { return present_.count(); }

  // Materialized simplices of the given dimension, sorted lexicographically.
  // Empty for dim < 0 or dim > max_dim.
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t simplex_count(int dim) const { return simplices(dim).size(); }
  std::vector<std::size_t> counts_per_dim() const;
  std::size_t total_simplex_count() const;

  // True iff s is a clique on present vertices (the empty simplex counts).
  bool contains(const Simplex& s) const;

  int component_count() const;

  // Structural comparison by vertex names: same materialization depth, same
  // present names, same simplex name lists per dimension. Ambient graphs
  // may differ.
  bool structurally_equal(const FlagComplex& other) const;

 private:
  std::shared_ptr<const Graph> graph_;
  Bitset present_;
  int max_dim_ = -1;
  std::vector<std::vector<Simplex>> by_dim_;  // index d holds dimension d
};

// Flag complex of the whole graph, materialized to max_dim >= -1.
FlagComplex flag_complex(const Graph& g, int max_dim,
                         const Limits& limits = {});
FlagComplex flag_complex(std::shared_ptr<const Graph> g, int max_dim,
                         const Limits& limits = {});

// Link of a simplex: the flag complex on the common neighbors of s within
// k's vertex set. link(k, EMPTY) == k. s must be a simplex of k.
FlagComplex link(const FlagComplex& k, const Simplex& s);

// Subcomplex induced on a vertex subset (names or index set); the subset
// must consist of vertices of k.
FlagComplex full_subcomplex(const FlagComplex& k, const Bitset& subset);
FlagComplex full_subcomplex(const FlagComplex& k,
                            const std::vector<std::string>& subset_names);

// Partition of the present vertices into 1-skeleton components, each
// sorted, components ordered by smallest member.
std::vector<std::vector<int>> connected_components(const FlagComplex& k);

namespace detail {

// One dimension step of clique enumeration: extends each clique in `lower`
// by every admissible vertex above its maximum. Both variants return the
// same list in the same order.
std::vector<Simplex> expand_cliques_serial(const Graph& g,
                                           const Bitset& present,
                                           const std::vector<Simplex>& lower);
std::vector<Simplex> expand_cliques_parallel(
    const Graph& g, const Bitset& present, const std::vector<Simplex>& lower);

}  // namespace detail

}  // namespace sigma
