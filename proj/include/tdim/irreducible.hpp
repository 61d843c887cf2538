#pragma once

#include <string>
#include <vector>

#include "tdim/graph.hpp"
#include "tdim/limits.hpp"
#include "tdim/resolve.hpp"
#include "tdim/threshold.hpp"

namespace tdim {

/// S_n: A = K_g(n) on ids 0..g(n)-1, B = K_{n-g(n)} after it, B-vertices
/// given landmark-neighbourhoods in A by reverse shortlex assignment.
Graph s_graph(int n);

/// S_{b,s}: the landmarks (empty graph K_b) on ids 0..b-1, K_{2^b} on the
/// next 2^b ids (shortlex-assigned into the landmarks), then the path P_s
/// whose first vertex is attached to landmark 0.
Graph s_graph_bs(int b, int s);

Graph join_k2bar(const Graph &g);
Graph join_k2(const Graph &g);

/// Connected graph of order n and metric dimension b that is irreducible.
/// Requires 1 <= b < n.
Graph irreducible_of(int n, int b);

struct Embedding {
  Graph graph;
  int p = 0;                   // size of the joined clique
  int k = 0;                   // landmark count, order = 2^k + k
  std::vector<VertexId> image; // image[v] = vertex of graph playing v
  VertexSet landmarks;
};

/// Irreducible graph of diameter 2 containing g as an induced subgraph.
Embedding embed_in_irreducible(const Graph &g);

enum class VerdictStatus { Irreducible, Reducible, Unknown };

std::string_view to_string(VerdictStatus s);

struct IrreducibilityVerdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::string rule; // the step that decided the verdict
  BetaResult beta;
  TauBounds tau_bounds;
};

/// Decides tau(g) = beta(g) by, in order: beta in {1, 2, n-1}, a lower-bound
/// certificate meeting beta, an upper-bound construction beating beta, and
/// exhaustive search within limits.max_complement_edges. Unknown otherwise.
///
/// Above limits.max_order, beta is only obtained when a resolving set of
/// the certified size exists; otherwise CapExceeded is thrown.
IrreducibilityVerdict is_irreducible(const Graph &g, const Limits &limits = {});

} // namespace tdim
