#pragma once

#include <cstdint>
#include <vector>

#include "tdim/graph.hpp"

namespace tdim {

inline constexpr int kMaxAtlasOrder = 7;
inline constexpr int kMaxCanonicalOrder = 11;

struct CanonicalGraph {
  Graph graph;
  std::uint64_t code = 0; // upper triangle, column by column, first pair most significant
};

/// Relabelling of g with the largest adjacency code among orderings that list
/// vertices by non-increasing degree. Isomorphic graphs get equal codes.
CanonicalGraph canonical_form(const Graph &g);

/// All connected graphs of order 1..max_order up to isomorphism, each in
/// canonical form, sorted by (order, code). Built by adding one vertex with
/// every nonempty neighbourhood to the previous layer and rejecting
/// canonical duplicates.
std::vector<CanonicalGraph> connected_atlas(int max_order);

} // namespace tdim
