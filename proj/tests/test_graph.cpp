#include <string>
#include <vector>

#include "doctest.h"
#include "sigma/corpus.hpp"
#include "sigma/errors.hpp"
#include "sigma/graph.hpp"

using namespace sigma;

namespace {

ParseError::Kind kind_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseError::Kind::malformed;
}

}  // namespace

TEST_CASE("parse_graph builds the path P3 with canonical order") {
  const Graph g =
      parse_graph(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
  CHECK(g.vertex_count() == 3);
  CHECK(g.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.index_of("b") == 1);
  CHECK(g.index_of("zz") == -1);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.connected());
  CHECK(g.component_count() == 1);
}

TEST_CASE("parse_graph normalizes edge order") {
  const Graph g =
      parse_graph(R"({"vertices":["a","b"],"edges":[["b","a"]]})");
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("parse_graph distinguishes failure kinds") {
  CHECK(kind_of("not json at all") == ParseError::Kind::malformed);
  CHECK(kind_of("[1,2]") == ParseError::Kind::malformed);
  CHECK(kind_of(R"({"vertices":["a",3],"edges":[]})") ==
        ParseError::Kind::malformed);
  CHECK(kind_of(R"({"vertices":[""],"edges":[]})") ==
        ParseError::Kind::malformed);
  CHECK(kind_of(R"({"vertices":["a"],"edges":[["a"]]})") ==
        ParseError::Kind::malformed);
  CHECK(kind_of(R"({"vertices":["a","a"],"edges":[]})") ==
        ParseError::Kind::duplicate_vertex);
  CHECK(kind_of(R"({"vertices":["a"],"edges":[["a","b"]]})") ==
        ParseError::Kind::unknown_vertex);
  CHECK(kind_of(R"({"vertices":["a"],"edges":[["a","a"]]})") ==
        ParseError::Kind::self_loop);
  CHECK(kind_of(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})") ==
        ParseError::Kind::duplicate_edge);
}

TEST_CASE("graph_to_json round trips and is byte-stable") {
  const Graph g = parse_graph(
      R"({"vertices":["x1","y1","x2","y2"],"edges":[["y1","y2"],["x1","x2"],["x1","y2"],["y1","x2"]]})");
  const std::string doc = graph_to_json(g);
  CHECK(doc == graph_to_json(parse_graph(doc)));
  const Graph back = parse_graph(doc);
  CHECK(back.names() == g.names());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("component counting and induced subgraphs") {
  const Graph g = parse_graph(
      R"({"vertices":["a","b","c","d","e"],"edges":[["a","b"],["c","d"]]})");
  CHECK(g.component_count() == 3);
  CHECK_FALSE(g.connected());

  Bitset keep(5);
  keep.set(0);
  keep.set(1);
  keep.set(4);
  CHECK(g.component_count_within(keep) == 2);

  const Graph sub = g.induced(keep);
  CHECK(sub.names() == std::vector<std::string>{"a", "b", "e"});
  CHECK(sub.edge_count() == 1);
  CHECK(sub.adjacent(0, 1));
  CHECK_FALSE(sub.adjacent(0, 2));
}

TEST_CASE("multipartite generator produces K_{2,...,2}") {
  const Graph g = multipartite_graph(3);
  CHECK(g.vertex_count() == 6);
  CHECK(g.names() ==
        std::vector<std::string>{"x1", "y1", "x2", "y2", "x3", "y3"});
  CHECK(g.edge_count() == 12);
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 2));
  CHECK(g.connected());
}

TEST_CASE("mask enumeration covers exactly the connected graphs") {
  CHECK(connected_graph_masks(1).size() == 1);
  CHECK(connected_graph_masks(2).size() == 1);
  CHECK(connected_graph_masks(3).size() == 4);
  CHECK(connected_graph_masks(4).size() == 38);
  for (const std::uint64_t mask : connected_graph_masks(4))
    CHECK(graph_from_mask(4, mask).connected());
}

TEST_CASE("named generators have the advertised shapes") {
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(complete_graph(5).edge_count() == 10);
  const Graph joined = join_graphs(path_graph(2, "l"), path_graph(2, "r"));
  CHECK(joined.vertex_count() == 4);
  CHECK(joined.edge_count() == 2 + 4);
  CHECK_THROWS_AS(join_graphs(path_graph(2), path_graph(2)), ValidationError);
}
