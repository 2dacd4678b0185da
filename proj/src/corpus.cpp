#include "sigma/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "sigma/errors.hpp"

namespace sigma {

Graph multipartite_graph(int parts) {
  if (parts < 1) throw std::invalid_argument("need at least one part");
  std::vector<std::string> names;
  for (int i = 1; i <= parts; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  std::vector<std::pair<int, int>> edges;
  const int n = 2 * parts;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / 2 != v / 2) edges.emplace_back(u, v);
  return Graph(std::move(names), edges);
}

namespace {

std::vector<std::string> numbered_names(int n, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

Graph path_graph(int n, const std::string& prefix) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(numbered_names(n, prefix), edges);
}

Graph cycle_graph(int n, const std::string& prefix) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(numbered_names(n, prefix), edges);
}

Graph complete_graph(int n, const std::string& prefix) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(numbered_names(n, prefix), edges);
}

Graph join_graphs(const Graph& a, const Graph& b) {
  std::vector<std::string> names = a.names();
  for (const auto& name : b.names()) {
    if (a.index_of(name) >= 0)
      throw ValidationError("join: vertex name '" + name + "' occurs on both sides");
    names.push_back(name);
  }
  std::vector<std::pair<int, int>> edges = a.edges();
  const int offset = a.vertex_count();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v = 0; v < b.vertex_count(); ++v) edges.emplace_back(u, v + offset);
  return Graph(std::move(names), edges);
}

std::uint64_t edge_pair_count(int n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

Graph graph_from_mask(int n, std::uint64_t mask, const std::string& prefix) {
  std::vector<std::pair<int, int>> edges;
  std::uint64_t bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask & (std::uint64_t{1} << bit)) edges.emplace_back(u, v);
  return Graph(numbered_names(n, prefix), edges);
}

std::vector<std::uint64_t> connected_graph_masks(int n) {
  std::vector<std::uint64_t> masks;
  const std::uint64_t limit = std::uint64_t{1} << edge_pair_count(n);
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    if (graph_from_mask(n, mask).connected()) masks.push_back(mask);
  return masks;
}

Graph random_connected_graph(int n, std::mt19937_64& rng,
                             const std::string& prefix) {
  // Each potential edge gets an independent fair bit; one rng word only
  // covers 64 pairs, so the bits are drawn in chunks.
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    std::uint64_t word = 0;
    int bits_left = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (bits_left == 0) {
          word = rng();
          bits_left = 64;
        }
        if (word & 1) edges.emplace_back(u, v);
        word >>= 1;
        --bits_left;
      }
    Graph g(numbered_names(n, prefix), std::move(edges));
    if (g.connected()) return g;
  }
}

namespace {

// Small exact rationals; avoids std::uniform_int_distribution so streams
// are identical across standard libraries.
Rational random_nonzero_rational(std::mt19937_64& rng) {
  const int numerator = 1 + static_cast<int>(rng() % 4);
  const int denominator = 1 + static_cast<int>(rng() % 3);
  const bool negative = (rng() & 1) != 0;
  Rational r(numerator, denominator);
  return negative ? -r : r;
}

}  // namespace

RaagCharacter random_raag_character(const Graph& g, std::mt19937_64& rng,
                                    int zero_percent) {
  for (;;) {
    std::vector<Rational> weights(g.vertex_count());
    bool nonzero = false;
    for (auto& w : weights) {
      if (static_cast<int>(rng() % 100) >= zero_percent) {
        w = random_nonzero_rational(rng);
        nonzero = true;
      }
    }
    if (nonzero) return RaagCharacter(g, std::move(weights));
  }
}

BBCharacter random_bb_character(const Graph& g, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Rational> weights(g.vertex_count());
    for (auto& w : weights) {
      if (rng() % 3 != 0) w = random_nonzero_rational(rng);
    }
    bool constant = true;
    for (const auto& w : weights)
      if (w != weights[0]) constant = false;
    if (!constant) return BBCharacter(g, std::move(weights));
  }
}

void write_corpus_files(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (int parts = 2; parts <= 4; ++parts) {
    std::string name = "k";
    for (int i = 0; i < parts; ++i) name += "2";
    std::ofstream out(dir + "/" + name + ".json");
    out << graph_to_json(multipartite_graph(parts));
  }
}

}  // namespace sigma
