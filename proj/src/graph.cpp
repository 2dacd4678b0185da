#include "sigma/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "json.hpp"

namespace sigma {

Graph::Graph(std::vector<std::string> vertex_names,
             const std::vector<std::pair<int, int>>& edge_list)
    : names_(std::move(vertex_names)) {
  const int n = vertex_count();
  adjacency_.assign(n, Bitset(n));
  for (auto [u, v] : edge_list) {
    if (u > v) std::swap(u, v);
    adjacency_[u].set(v);
    adjacency_[v].set(u);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int Graph::index_of(const std::string& vertex_name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names_[v] == vertex_name) return v;
  return -1;
}

Bitset Graph::all_vertices() const {
  Bitset b(vertex_count());
  b.set();
  return b;
}

int Graph::component_count_within(const Bitset& keep) const {
  int components = 0;
  Bitset seen(vertex_count());
  std::vector<int> stack;
  for (std::size_t s = keep.find_first(); s != Bitset::npos;
       s = keep.find_next(s)) {
    if (seen.test(s)) continue;
    ++components;
    stack.push_back(static_cast<int>(s));
    seen.set(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      Bitset next = adjacency_[u] & keep;
      for (std::size_t w = next.find_first(); w != Bitset::npos;
           w = next.find_next(w)) {
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(static_cast<int>(w));
        }
      }
    }
  }
  return components;
}

int Graph::component_count() const {
  return component_count_within(all_vertices());
}

bool Graph::connected() const {
  return vertex_count() > 0 && component_count() == 1;
}

Graph Graph::induced(const Bitset& keep) const {
  std::vector<std::string> sub_names;
  std::vector<int> back(vertex_count(), -1);
  for (std::size_t v = keep.find_first(); v != Bitset::npos;
       v = keep.find_next(v)) {
    back[v] = static_cast<int>(sub_names.size());
    sub_names.push_back(names_[v]);
  }
  std::vector<std::pair<int, int>> sub_edges;
  for (const auto& [u, v] : edges_)
    if (keep.test(u) && keep.test(v)) sub_edges.emplace_back(back[u], back[v]);
  return Graph(std::move(sub_names), sub_edges);
}

Graph parse_graph(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseError::Kind::malformed,
                     std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc["vertices"].is_array() || !doc["edges"].is_array())
    throw ParseError(ParseError::Kind::malformed,
                     "graph document must be {\"vertices\": [...], \"edges\": [...]}");

  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  for (const auto& item : doc["vertices"]) {
    if (!item.is_string() || item.get<std::string>().empty())
      throw ParseError(ParseError::Kind::malformed,
                       "vertex ids must be nonempty strings");
    const auto name = item.get<std::string>();
    if (index.count(name))
      throw ParseError(ParseError::Kind::duplicate_vertex,
                       "duplicate vertex id '" + name + "'");
    index[name] = static_cast<int>(names.size());
    names.push_back(name);
  }

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_string())
      throw ParseError(ParseError::Kind::malformed,
                       "edges must be pairs of vertex ids");
    const auto a = item[0].get<std::string>();
    const auto b = item[1].get<std::string>();
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end())
      throw ParseError(ParseError::Kind::unknown_vertex,
                       "edge endpoint '" + a + "' is not a vertex");
    if (ib == index.end())
      throw ParseError(ParseError::Kind::unknown_vertex,
                       "edge endpoint '" + b + "' is not a vertex");
    int u = ia->second, v = ib->second;
    if (u == v)
      throw ParseError(ParseError::Kind::self_loop,
                       "self-loop at vertex '" + a + "'");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second)
      throw ParseError(ParseError::Kind::duplicate_edge,
                       "duplicate edge {" + a + ", " + b + "}");
    edges.emplace_back(u, v);
  }
  return Graph(std::move(names), edges);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.name(v));
  doc["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges())
    doc["edges"].push_back({g.name(u), g.name(v)});
  return doc.dump(2) + "\n";
}

}  // namespace sigma
