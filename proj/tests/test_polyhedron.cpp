#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sigma/bb.hpp"
#include "sigma/corpus.hpp"
#include "sigma/errors.hpp"
#include "sigma/polyhedron.hpp"

using namespace sigma;

namespace {

Bitset bits(int n, std::vector<int> set) {
  Bitset b(n);
  for (const int v : set) b.set(v);
  return b;
}

}  // namespace

TEST_CASE("badness of vertex sets") {
  const Graph p3 = path_graph(3);
  CHECK(is_bad_set(p3, bits(3, {1})));        // rest disconnected
  CHECK_FALSE(is_bad_set(p3, bits(3, {0})));  // rest connected, dominated
  CHECK(is_bad_set(p3, bits(3, {0, 1, 2})));   // rest empty
  CHECK_FALSE(is_bad_set(p3, bits(3, {0, 2})));  // middle dominates both ends
  CHECK_FALSE(is_bad_set(p3, bits(3, {})));

  const Graph k22 = multipartite_graph(2);
  CHECK(is_bad_set(k22, bits(4, {0, 1})));
  CHECK_FALSE(is_bad_set(k22, bits(4, {0, 2})));
}

TEST_CASE("minimal bad sets of the named graphs") {
  const Graph p3 = path_graph(3);
  CHECK(minimal_bad_sets(p3) == std::vector<BadSet>{BadSet{{1}}});

  const Graph k22 = multipartite_graph(2);
  CHECK(minimal_bad_sets(k22) ==
        std::vector<BadSet>{BadSet{{0, 1}}, BadSet{{2, 3}}});

  CHECK(minimal_bad_sets(complete_graph(3)).empty());
  CHECK(minimal_bad_sets(complete_graph(1)).empty());

  CHECK_THROWS_AS(minimal_bad_sets(Graph({"a", "b"}, {})), PreconditionError);
}

TEST_CASE("pruned enumeration matches the definition on every small graph") {
  for (int n = 2; n <= 5; ++n) {
    for (const std::uint64_t mask : connected_graph_masks(n)) {
      const Graph g = graph_from_mask(n, mask);
      CHECK(minimal_bad_sets(g) == oracles::exhaustive_minimal_bad_sets(g));
    }
  }
}

TEST_CASE("complement polyhedron of the named graphs") {
  const SpherePolyhedron line = sigma1_complement(path_graph(3));
  REQUIRE(line.systems.size() == 1);
  CHECK(line.systems[0].equations.empty());  // singleton set: whole sphere

  CHECK(sigma1_complement(complete_graph(3)).systems.empty());

  const SpherePolyhedron quad = sigma1_complement(multipartite_graph(2));
  REQUIRE(quad.systems.size() == 2);
  CHECK(quad.systems[0] == EqualitySystem{{{0, 1}}});
  CHECK(quad.systems[1] == EqualitySystem{{{2, 3}}});
}

TEST_CASE("membership in the polyhedron") {
  const Graph k22 = multipartite_graph(2);
  const SpherePolyhedron p = sigma1_complement(k22);
  auto chi = [&](std::vector<int> ints) {
    std::vector<Rational> weights(ints.begin(), ints.end());
    return BBCharacter(k22, std::move(weights));
  };
  CHECK(polyhedron_contains(p, chi({0, 0, 1, 2})));
  CHECK_FALSE(polyhedron_contains(p, chi({0, 1, 0, 1})));
  CHECK(polyhedron_contains(p, chi({0, 1, 2, 2})));

  // An empty system swallows the whole sphere.
  const Graph p3 = path_graph(3);
  const SpherePolyhedron whole = sigma1_complement(p3);
  const BBCharacter any(p3, {Rational(0), Rational(7), Rational(1, 3)});
  CHECK(polyhedron_contains(whole, any));

  CHECK_THROWS_AS(polyhedron_contains(p, any), ValidationError);
}

TEST_CASE("vertex cap on the enumeration") {
  std::vector<std::string> names;
  for (int i = 0; i < 17; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < 17; ++i) edges.emplace_back(i, i + 1);
  CHECK_THROWS_AS(minimal_bad_sets(Graph(names, edges)), ResourceCapError);

  // A 16-vertex path is inside the cap: the separators are the interior
  // vertices.
  const Graph p16 = path_graph(16);
  CHECK(minimal_bad_sets(p16).size() == 14);
}

TEST_CASE("polyhedron document lists systems with vertex names") {
  const Graph k22 = multipartite_graph(2);
  const nlohmann::json doc =
      polyhedron_to_json(sigma1_complement(k22), k22);
  REQUIRE(doc.contains("systems"));
  REQUIRE(doc["systems"].size() == 2);
  CHECK(doc["systems"][0].size() == 1);
  CHECK(doc["systems"][0][0][0] == "x1");
  CHECK(doc["systems"][0][0][1] == "y1");
  CHECK(doc["systems"][1][0][0] == "x2");
  CHECK(doc["systems"][1][0][1] == "y2");
}

TEST_CASE("the polyhedron is exactly the Sigma^1 complement, pointwise") {
  std::vector<Graph> graphs;
  for (int parts = 2; parts <= 4; ++parts) graphs.push_back(multipartite_graph(parts));
  for (int n = 3; n <= 8; ++n) graphs.push_back(path_graph(n));
  for (int n = 4; n <= 8; ++n) graphs.push_back(cycle_graph(n));
  for (int n = 3; n <= 5; ++n) graphs.push_back(complete_graph(n));

  std::mt19937_64 rng(271828);
  for (const Graph& g : graphs) {
    const SpherePolyhedron p = sigma1_complement(g);
    for (int trial = 0; trial < 1000; ++trial) {
      const BBCharacter chi = random_bb_character(g, rng);
      const bool excluded =
          bb_sigma(g, chi, 1, Variant::homological).value == Tri::no;
      CHECK(polyhedron_contains(p, chi) == excluded);
    }
  }
}
