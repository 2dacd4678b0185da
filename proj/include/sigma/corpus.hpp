#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sigma/character.hpp"
#include "sigma/graph.hpp"

namespace sigma {

// Complete multipartite graph K_{2,...,2} with the given number of parts
// {x_i, y_i}; the only non-edges are the pairs x_i y_i.
Graph multipartite_graph(int parts);

Graph path_graph(int n, const std::string& prefix = "v");
Graph cycle_graph(int n, const std::string& prefix = "v");
Graph complete_graph(int n, const std::string& prefix = "v");

// Join: disjoint union plus every cross edge. Vertex names must be
// disjoint.
Graph join_graphs(const Graph& a, const Graph& b);

// Graphs on n labeled vertices are coded by edge masks over the pairs
// (i, j), i < j, in lexicographic order.
std::uint64_t edge_pair_count(int n);
Graph graph_from_mask(int n, std::uint64_t mask, const std::string& prefix = "v");
std::vector<std::uint64_t> connected_graph_masks(int n);

Graph random_connected_graph(int n, std::mt19937_64& rng,
                             const std::string& prefix = "v");

// Random exact-rational characters; deterministic for a fixed rng state.
RaagCharacter random_raag_character(const Graph& g, std::mt19937_64& rng,
                                    int zero_percent);
BBCharacter random_bb_character(const Graph& g, std::mt19937_64& rng);

// Writes the K_{2,...,2} graph documents (2, 3 and 4 parts) into dir.
void write_corpus_files(const std::string& dir);

}  // namespace sigma
