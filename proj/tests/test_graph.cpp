#include "doctest.h"
#include "generators.hpp"
#include "oracle.hpp"
#include "tdim/errors.hpp"
#include "tdim/graph.hpp"
#include "tdim/graph_io.hpp"

using namespace tdim;

TEST_CASE("edge sets are sorted, deduplicated and loop-free") {
  EdgeSet e;
  CHECK(e.insert(Edge(3, 1)));
  CHECK_FALSE(e.insert(Edge(1, 3)));
  CHECK(e.insert(Edge(0, 2)));
  CHECK(e.size() == 2);
  CHECK(e.items().front() == Edge(0, 2));
  CHECK(e.contains(Edge(3, 1)));
  CHECK_THROWS_AS(e.insert(Edge(2, 2)), std::invalid_argument);
}

TEST_CASE("graph construction validates ids") {
  Graph g(3);
  g.add_edge(0, 2);
  CHECK(g.adjacent(2, 0));
  CHECK(g.degree(0) == 1);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK_THROWS(g.add_edge(0, 3));
  CHECK_THROWS(g.add_edge(-1, 1));
}

TEST_CASE("distances on paths, cycles and disconnected graphs") {
  const auto d = distances(path(5));
  CHECK(d(0, 4) == 4);
  CHECK(d(1, 3) == 2);
  CHECK(diameter(path(9)) == 8);
  CHECK(diameter(cycle(7)) == 3);
  CHECK(diameter(complete(4)) == 1);
  CHECK(diameter(Graph(1)) == 0);
  const auto split = disjoint_union(path(2), path(2));
  CHECK_FALSE(is_connected(split));
  CHECK_FALSE(diameter(split).has_value());
  CHECK(distances(split)(0, 3) == kUnreachable);
  CHECK(sphere(distances(cycle(6)), 0, 2) == VertexSet::from({2, 4}));
}

TEST_CASE("distances agree with breadth-first search") {
  gen::GraphGen rng;
  for (int i = 0; i < 200; ++i) {
    const auto g = rng.random(rng.uniform(1, 20), rng.uniform(5, 50) / 100.0);
    const auto d = distances(g);
    const auto ref = oracle::bfs_all(oracle::from_graph(g));
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v)
        REQUIRE(d(u, v) == (ref[u][v] < 0 ? kUnreachable : ref[u][v]));
  }
}

TEST_CASE("graph operations") {
  const auto j = join(path(3), empty_graph(2));
  CHECK(j.order() == 5);
  CHECK(j.edge_count() == 2 + 6);
  CHECK(j.adjacent(0, 3));
  CHECK_FALSE(j.adjacent(3, 4));

  CHECK(complement(complete(5)).edge_count() == 0);
  CHECK(complement_edges(cycle(5)).size() == 5);
  CHECK(power(cycle(8), 2) == cycle_square(8));

  const auto u = disjoint_union(complete(2), path(3));
  CHECK(u.adjacent(2, 3));
  CHECK_FALSE(u.adjacent(1, 2));

  const std::vector<VertexId> vs{4, 0, 2};
  const auto ind = induced(cycle(5), vs);
  CHECK(ind.order() == 3);
  CHECK(ind.adjacent(0, 1));
  CHECK_FALSE(ind.adjacent(1, 2));

  EdgeSet extra{Edge(0, 2)};
  CHECK(add_edges(path(3), extra) == cycle(3));
  CHECK_THROWS(add_edges(path(3), EdgeSet{Edge(0, 1)}));
  CHECK_THROWS(add_edges(path(3), EdgeSet{Edge(0, 5)}));
}

TEST_CASE("graph families") {
  CHECK(path(1).edge_count() == 0);
  CHECK(cycle(6).min_degree() == 2);
  CHECK(complete(6).edge_count() == 15);

  const std::vector<int> parts{2, 3};
  const auto k23 = complete_multipartite(parts);
  CHECK(k23.edge_count() == 6);
  CHECK_FALSE(k23.adjacent(0, 1));
  CHECK(k23.adjacent(1, 2));

  const auto pet = generalized_petersen(5, 2);
  CHECK(pet.order() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(pet.min_degree() == 3);
  CHECK(pet.max_degree() == 3);
  CHECK(pet.adjacent(0, 5));
  CHECK(pet.adjacent(5, 7));
  CHECK(diameter(pet) == 2);
  CHECK_THROWS(generalized_petersen(4, 2));
  CHECK_THROWS(generalized_petersen(2, 1));

  for (int n = 5; n <= 12; ++n) {
    const auto c = cycle_square(n);
    CHECK(c.min_degree() == 4);
    CHECK(c.max_degree() == 4);
  }

  const auto t = subdivided_star(2);
  CHECK(t.order() == 10);
  CHECK(t.degree(0) == 3);
  CHECK(t.adjacent(0, 1));
  CHECK(t.adjacent(1, 2));
  CHECK(t.adjacent(2, 3));
  CHECK(t.adjacent(0, 4));
  CHECK(diameter(t) == 6);
}

TEST_CASE("maximum clique matches brute force and is lexicographically first") {
  gen::GraphGen rng;
  for (int i = 0; i < 300; ++i) {
    const auto g = rng.random(rng.uniform(1, 12), rng.uniform(10, 90) / 100.0);
    const auto c = max_clique(g);
    REQUIRE(static_cast<int>(c.size()) == oracle::clique_number(oracle::from_graph(g)));
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        REQUIRE(g.adjacent(c[a], c[b]));
  }
  // Two triangles; the first one wins.
  Graph g(6);
  for (auto [u, v] : {std::pair{3, 4}, {3, 5}, {4, 5}, {0, 1}, {0, 2}, {1, 2}})
    g.add_edge(u, v);
  CHECK(max_clique(g) == std::vector<VertexId>{0, 1, 2});
  CHECK_THROWS_AS(max_clique(complete(10), 8), CapExceeded);
}

TEST_CASE("induced subgraph search") {
  auto m = is_induced_subgraph(path(3), cycle(5));
  REQUIRE(m.has_value());
  CHECK(cycle(5).adjacent((*m)[0], (*m)[1]));
  CHECK_FALSE(cycle(5).adjacent((*m)[0], (*m)[2]));
  CHECK_FALSE(is_induced_subgraph(complete(3), cycle(5)).has_value());
  CHECK_FALSE(is_induced_subgraph(path(4), complete(4)).has_value());
  CHECK(is_induced_subgraph(empty_graph(2), cycle(4)).has_value());
}

TEST_CASE("edge-list parsing is strict") {
  const auto g = parse_edge_list("3 2\n0 1\n1 2\n");
  CHECK(g == path(3));
  CHECK(parse_edge_list("2 1\r\n0 1\r\n") == path(2));
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 x\n"), ParseError);
  try {
    parse_edge_list("3 2\n0 1\n2 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("canonical edge lists round-trip byte for byte") {
  gen::GraphGen rng;
  for (int i = 0; i < 100; ++i) {
    const auto g = rng.random(rng.uniform(1, 30), 0.2);
    const auto text = format_edge_list(g);
    REQUIRE(format_edge_list(parse_edge_list(text)) == text);
  }
  CHECK(format_edge_list(path(3)) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("content hash and DOT export") {
  const auto h = content_hash(cycle(5));
  CHECK(h.rfind("fnv1a64:", 0) == 0);
  CHECK(h.size() == 8 + 16);
  CHECK(h == content_hash(parse_edge_list(format_edge_list(cycle(5)))));
  CHECK(h != content_hash(path(5)));

  const auto dot = format_dot(path(3), VertexSet::from({0}));
  CHECK(dot.rfind("graph G {\n", 0) == 0);
  CHECK(dot.find("  0 [style=filled") != std::string::npos);
  CHECK(dot.find("  1;\n") != std::string::npos);
  CHECK(dot.find("  1 -- 2;\n") != std::string::npos);
}
