#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tdim/certificate.hpp"
#include "tdim/graph.hpp"

namespace tdim {

/// Distances from one vertex to an ordered landmark list. Equal signatures
/// mean the landmarks fail to resolve the two vertices.
struct Signature {
  std::vector<VertexId> landmarks;
  std::vector<Distance> dist;

  friend bool operator==(const Signature &, const Signature &) = default;
};

Signature signature(const DistanceMatrix &d, VertexId v, std::span<const VertexId> landmarks);

bool resolves(const Graph &g, const VertexSet &w);
bool resolves(const DistanceMatrix &d, const VertexSet &w);

/// Lexicographically first pair u < v with equal signatures, if any.
std::optional<std::pair<VertexId, VertexId>> first_unresolved_pair(const DistanceMatrix &d, const VertexSet &w);

struct BetaResult {
  int beta = 0;
  VertexSet basis;
};

/// Exact metric dimension; basis is the lexicographically smallest resolving
/// set of minimum size. Throws CapExceeded when order > max_order.
BetaResult metric_dimension(const Graph &g, int max_order = 24);

/// Smallest b in [lo, hi] admitting a resolving set of size b, together with
/// the lexicographically smallest such set. Callers must guarantee that no
/// resolving set smaller than lo exists, because sizes are pruned with
/// basis_vertex_filter.
std::optional<BetaResult> smallest_resolving_set(const DistanceMatrix &d, int lo, int hi);

/// Vertices v with |N_k(v)| > (2k+1)^(b-1) for some 1 <= k <= diam; such a
/// vertex lies in no basis of size b.
VertexSet basis_vertex_filter(const Graph &g, int b);
VertexSet basis_vertex_filter(const DistanceMatrix &d, int b);

/// beta >= ceil(log2 c) for a maximum clique of size c.
Certificate clique_lower_bound(const Graph &g, int clique_cap = 64);

/// beta >= g(n) when diam <= 2 (and n >= 2).
std::optional<Certificate> diam2_lower_bound(const Graph &g);

} // namespace tdim
