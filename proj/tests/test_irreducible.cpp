#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "tdim/atlas.hpp"
#include "tdim/errors.hpp"
#include "tdim/graph_io.hpp"
#include "tdim/irreducible.hpp"

using namespace tdim;

namespace {

std::string golden(const std::string &name) {
  std::ifstream in(std::string(TDIM_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("S_n graphs") {
  CHECK(s_graph(2) == complete(2));
  for (int n = 2; n <= 16; ++n) {
    const auto g = s_graph(n);
    CHECK(g.order() == n);
    const auto r = metric_dimension(g);
    CHECK(r.beta == g_of(n));
    CHECK(resolves(g, VertexSet::range(g_of(n))));
    if (n >= 3)
      CHECK(diameter(g) <= 2);
  }
  CHECK(format_edge_list(s_graph(8)) == golden("sgraph_8.el"));
  CHECK_THROWS(s_graph(1));
}

TEST_CASE("S_{b,s} graphs") {
  CHECK(format_edge_list(s_graph_bs(2, 3)) == golden("sgraphbs_2_3.el"));
  const auto a = s_graph_bs(2, 1);
  CHECK(a.order() == 7);
  CHECK(metric_dimension(a).beta == 2);
  CHECK(clique_lower_bound(a).value == 2);
  const auto b = s_graph_bs(3, 1);
  CHECK(b.order() == 12);
  CHECK(metric_dimension(b).beta == 3);
  CHECK(clique_lower_bound(b).value == 3);
  const auto c = s_graph_bs(3, 2);
  CHECK(tau_lower_bound(c).kind == CertificateKind::Clique);
  CHECK(tau_lower_bound(c).value == 3);
  CHECK(resolves(c, VertexSet::range(3)));
  CHECK_THROWS(s_graph_bs(1, 1));
  CHECK_THROWS(s_graph_bs(2, 0));
}

TEST_CASE("joins with two vertices") {
  CHECK(metric_dimension(join_k2bar(cycle(4))).beta == 3);
  CHECK(metric_dimension(join_k2bar(subdivided_star(2))).beta == 5);
  CHECK(join_k2bar(Graph(1)).edge_count() == 2);
  CHECK(join_k2bar(Graph(1)).degree(0) == 2);
  CHECK(metric_dimension(join_k2bar(Graph(1))).beta == 1);
  for (int n = 1; n <= 6; ++n)
    CHECK(metric_dimension(join_k2(complete(n))).beta == metric_dimension(complete(n)).beta + 2);
  CHECK(metric_dimension(join_k2(cycle(4))).beta == 3);
  const int d = metric_dimension(join_k2(path(3))).beta - metric_dimension(path(3)).beta;
  CHECK((d == 1 || d == 2));
}

TEST_CASE("irreducible_of documented cases") {
  const auto a = irreducible_of(6, 4);
  CHECK(a == join(complete(4), empty_graph(2)));
  CHECK(a.edge_count() == 14);
  CHECK(metric_dimension(a).beta == 4);

  const auto b = irreducible_of(10, 4);
  CHECK(b == join(s_graph(8), empty_graph(2)));
  CHECK(metric_dimension(b).beta == 4);

  const auto c = irreducible_of(8, 2);
  CHECK(c == s_graph_bs(2, 2));
  CHECK(metric_dimension(c).beta == 2);

  CHECK(irreducible_of(5, 1) == path(5));
  CHECK_THROWS(irreducible_of(5, 5));
  CHECK_THROWS(irreducible_of(5, 0));
  CHECK_THROWS(irreducible_of(1, 1));
}

TEST_CASE("embedding into an irreducible graph") {
  const auto p3 = embed_in_irreducible(path(3));
  CHECK(p3.p == 1);
  CHECK(p3.k == 2);
  CHECK(p3.graph.order() == 6);
  CHECK(metric_dimension(p3.graph).beta == 2);
  CHECK(is_induced_subgraph(path(3), p3.graph).has_value());
  CHECK(induced(p3.graph, p3.image) == path(3));

  const auto k1 = embed_in_irreducible(Graph(1));
  CHECK(k1.p == 1);
  CHECK(k1.k == 1);
  CHECK(k1.graph.order() == 3);

  const auto c5 = embed_in_irreducible(cycle(5));
  CHECK(c5.p == 3);
  CHECK(c5.k == 3);
  CHECK(c5.graph.order() == 11);
  CHECK(metric_dimension(c5.graph).beta == 3);
  CHECK(diameter(c5.graph) == 2);
  CHECK(induced(c5.graph, c5.image) == cycle(5));
  // The last clique vertex is universal on the landmarks.
  CHECK(c5.landmarks.is_subset_of(c5.graph.neighbours(7)));
}

TEST_CASE("verdicts on documented graphs") {
  const auto pet = is_irreducible(generalized_petersen(5, 2));
  CHECK(pet.status == VerdictStatus::Irreducible);
  CHECK(pet.beta.beta == 3);
  CHECK(pet.tau_bounds.exact == 3);
  CHECK(no_two_basis_supergraph(generalized_petersen(5, 2))->value == 3);

  const auto t = join_k2bar(subdivided_star(2));
  const auto tv = is_irreducible(t);
  CHECK(tv.status == VerdictStatus::Reducible);
  CHECK(tv.beta.beta == 5);
  CHECK(tv.tau_bounds.upper == 4);
  CHECK(verify_witness(t, tv.tau_bounds.witness));

  for (int n = 4; n <= 12; ++n) {
    const auto v = is_irreducible(s_graph(n));
    CHECK(v.status == VerdictStatus::Irreducible);
    const auto d2 = diam2_lower_bound(s_graph(n));
    REQUIRE(d2.has_value());
    CHECK(d2->value == v.beta.beta);
  }

  const auto k33 = is_irreducible(complete_multipartite(std::vector<int>{3, 3}));
  CHECK(k33.status == VerdictStatus::Reducible);
  CHECK(k33.tau_bounds.upper == 3);

  const auto k5 = is_irreducible(complete(5));
  CHECK(k5.status == VerdictStatus::Irreducible);
  CHECK(k5.rule == "beta=n-1");
  CHECK(k5.tau_bounds.lower_certificate.kind == CertificateKind::Exhaustive);

  CHECK(is_irreducible(path(6)).rule == "beta=1");
  CHECK(is_irreducible(cycle(6)).rule == "beta=2");
  CHECK(is_irreducible(Graph(1)).status == VerdictStatus::Irreducible);
  CHECK(is_irreducible(cycle_square(10)).rule == "MinDegree");
}

TEST_CASE("verdicts above the order cap use certified bases") {
  const auto v = is_irreducible(generalized_petersen(30, 2));
  CHECK(v.status == VerdictStatus::Irreducible);
  CHECK(v.beta.beta == 3);
  CHECK(resolves(generalized_petersen(30, 2), v.beta.basis));
  CHECK(is_irreducible(path(40)).rule == "beta=1");
  CHECK_THROWS_AS(is_irreducible(complete_multipartite(std::vector<int>{15, 15})), CapExceeded);
}

TEST_CASE("verdicts agree with brute force on small connected graphs") {
  for (const auto &cg : connected_atlas(5)) {
    const auto s = oracle::from_graph(cg.graph);
    const bool irreducible = oracle::tau(s) == oracle::beta(s);
    const auto v = is_irreducible(cg.graph);
    REQUIRE(v.status != VerdictStatus::Unknown);
    REQUIRE((v.status == VerdictStatus::Irreducible) == irreducible);
  }
}

TEST_CASE("verdicts needing exhaustive search become unknown without it") {
  Limits tight;
  tight.max_complement_edges = 0;
  int exhaustive = 0;
  for (const auto &cg : connected_atlas(6)) {
    const auto v = is_irreducible(cg.graph);
    if (v.rule != "Exhaustive")
      continue;
    ++exhaustive;
    const auto u = is_irreducible(cg.graph, tight);
    REQUIRE(u.status == VerdictStatus::Unknown);
    REQUIRE(u.rule == "none");
    REQUIRE(u.tau_bounds.lower < u.beta.beta);
    REQUIRE(u.tau_bounds.upper == u.beta.beta);
  }
  CHECK(exhaustive > 0);
  const auto k33 = is_irreducible(complete_multipartite(std::vector<int>{3, 3}), tight);
  CHECK(k33.status == VerdictStatus::Reducible);
  CHECK(k33.rule == "chromatic");
}
