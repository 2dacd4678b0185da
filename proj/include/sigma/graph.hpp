#pragma once

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <utility>
#include <vector>

#include "sigma/errors.hpp"

namespace sigma {

using Bitset = boost::dynamic_bitset<>;

// Finite simple graph over named vertices. Declaration order of the
// vertices is the canonical order used for every tie-break downstream.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertex_names,
        const std::vector<std::pair<int, int>>& edge_list);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when the name is not a vertex.
  int index_of(const std::string& vertex_name) const;

  bool adjacent(int u, int v) const { return adjacency_[u].test(v); }
  const Bitset& neighbors(int v) const { return adjacency_[v]; }

  std::size_t edge_count() const { return edges_.size(); }
  // Pairs (u, v) with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  Bitset all_vertices() const;
  int component_count() const;
  int component_count_within(const Bitset& keep) const;
  bool connected() const;

  // Subgraph induced on `keep`; vertex names and their relative order are
  // preserved.
  Graph induced(const Bitset& keep) const;

 private:
  std::vector<std::string> names_;
  std::vector<Bitset> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

// Parses {"vertices": [...], "edges": [[u, v], ...]}.
Graph parse_graph(const std::string& json_text);

// Canonical document for the graph (sorted keys, canonical edge order),
// with a trailing newline.
std::string graph_to_json(const Graph& g);

}  // namespace sigma
