#include "doctest.h"
#include "generators.hpp"
#include "oracle.hpp"
#include "tdim/errors.hpp"
#include "tdim/resolve.hpp"

using namespace tdim;

TEST_CASE("resolving sets on small graphs") {
  CHECK(resolves(path(4), VertexSet::from({0})));
  CHECK_FALSE(resolves(path(4), VertexSet::from({1})));
  CHECK_FALSE(resolves(complete(3), VertexSet::from({0})));
  CHECK(resolves(complete(3), VertexSet::from({0, 1})));
  const auto bad = first_unresolved_pair(distances(complete(3)), VertexSet::from({0}));
  REQUIRE(bad.has_value());
  CHECK(*bad == std::pair<VertexId, VertexId>{1, 2});
  CHECK_FALSE(first_unresolved_pair(distances(path(4)), VertexSet::from({0})).has_value());
  CHECK(resolves(Graph(1), VertexSet{}));
  CHECK_FALSE(resolves(Graph(2), VertexSet{}));
}

TEST_CASE("signatures list distances in landmark order") {
  const auto d = distances(path(5));
  const std::vector<VertexId> w{4, 0};
  const auto s = signature(d, 1, w);
  CHECK(s.dist == std::vector<Distance>{3, 1});
  CHECK(signature(d, 1, w) == s);
  CHECK_FALSE(signature(d, 2, w) == s);
}

TEST_CASE("resolves agrees with signature comparison") {
  gen::GraphGen rng;
  for (int i = 0; i < 300; ++i) {
    const int n = rng.uniform(1, 10);
    const auto g = rng.random(n, rng.uniform(10, 70) / 100.0);
    std::vector<int> w;
    for (int v = 0; v < n; ++v)
      if (rng.coin(0.35))
        w.push_back(v);
    const auto ref = oracle::resolves(oracle::bfs_all(oracle::from_graph(g)), w);
    REQUIRE(resolves(g, VertexSet::from(w)) == ref);
    REQUIRE(first_unresolved_pair(distances(g), VertexSet::from(w)).has_value() == !ref);
  }
}

TEST_CASE("metric dimension matches brute force including the lexicographic basis") {
  gen::GraphGen rng;
  for (int i = 0; i < 300; ++i) {
    const int n = rng.uniform(1, 10);
    const auto g = rng.coin(0.7) ? rng.connected(n, rng.uniform(0, 60) / 100.0) : rng.random(n, 0.3);
    const auto [beta, basis] = oracle::beta_basis(oracle::from_graph(g));
    const auto r = metric_dimension(g);
    REQUIRE(r.beta == beta);
    REQUIRE(r.basis.to_vector() == basis);
  }
}

TEST_CASE("metric dimension of standard families") {
  CHECK(metric_dimension(Graph(1)).beta == 0);
  CHECK(metric_dimension(path(7)).beta == 1);
  CHECK(metric_dimension(path(7)).basis == VertexSet::from({0}));
  CHECK(metric_dimension(cycle(7)).beta == 2);
  CHECK(metric_dimension(complete(6)).beta == 5);
  CHECK(metric_dimension(generalized_petersen(5, 2)).beta == 3);
  CHECK_THROWS_AS(metric_dimension(path(30)), CapExceeded);
  CHECK(metric_dimension(path(30), 30).beta == 1);
}

TEST_CASE("bounded resolving-set search") {
  const auto d = distances(cycle(8));
  CHECK_FALSE(smallest_resolving_set(d, 1, 1).has_value());
  const auto r = smallest_resolving_set(d, 1, 3);
  REQUIRE(r.has_value());
  CHECK(r->beta == 2);
  CHECK(r->basis == VertexSet::from({0, 1}));
}

TEST_CASE("basis vertex filter never removes a basis vertex") {
  gen::GraphGen rng;
  for (int i = 0; i < 200; ++i) {
    const int n = rng.uniform(2, 9);
    const auto g = rng.connected(n, rng.uniform(0, 50) / 100.0);
    const auto s = oracle::from_graph(g);
    const int beta = oracle::beta(s);
    const auto d = oracle::bfs_all(s);
    const auto excluded = basis_vertex_filter(g, beta);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (std::popcount(m) != beta || !oracle::resolves(d, oracle::members(m)))
        continue;
      for (int v : oracle::members(m))
        REQUIRE_FALSE(excluded.contains(v));
    }
  }
  // The centre of a large star sees too many vertices at distance 1 for b = 1.
  Graph star(6);
  for (int v = 1; v < 6; ++v)
    star.add_edge(0, v);
  CHECK(basis_vertex_filter(star, 1).contains(0));
}

TEST_CASE("clique and diameter-two lower bounds") {
  const auto c = clique_lower_bound(complete(8));
  CHECK(c.kind == CertificateKind::Clique);
  CHECK(c.value == 3);
  CHECK(c.vertices.size() == 8);
  CHECK(clique_lower_bound(Graph(1)).value == 0);

  const auto d2 = diam2_lower_bound(generalized_petersen(5, 2));
  REQUIRE(d2.has_value());
  CHECK(d2->kind == CertificateKind::Diam2);
  CHECK(d2->value == 3);
  CHECK_FALSE(diam2_lower_bound(path(4)).has_value());
  CHECK_FALSE(diam2_lower_bound(Graph(1)).has_value());
}
