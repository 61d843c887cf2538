#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tdim/vertex_set.hpp"

namespace tdim {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Sorted, duplicate-free set of edges. Self-loops are rejected on insert.
class EdgeSet {
public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> edges);
  explicit EdgeSet(std::vector<Edge> edges);

  /// Returns false when the edge was already present.
  bool insert(Edge e);
  [[nodiscard]] bool contains(Edge e) const;
  [[nodiscard]] std::size_t size() const { return edges_.size(); }
  [[nodiscard]] bool empty() const { return edges_.empty(); }
  [[nodiscard]] auto begin() const { return edges_.begin(); }
  [[nodiscard]] auto end() const { return edges_.end(); }
  [[nodiscard]] const std::vector<Edge> &items() const { return edges_; }

  friend bool operator==(const EdgeSet &, const EdgeSet &) = default;

private:
  std::vector<Edge> edges_;
};

/// Simple undirected graph on vertices 0..order-1 with bit-row adjacency.
class Graph {
public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, const EdgeSet &edges);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] bool adjacent(VertexId u, VertexId v) const { return rows_[u].contains(v); }
  [[nodiscard]] const VertexSet &neighbours(VertexId v) const { return rows_[v]; }
  [[nodiscard]] int degree(VertexId v) const { return rows_[v].size(); }
  [[nodiscard]] VertexSet vertices() const { return VertexSet::range(order_); }
  [[nodiscard]] int edge_count() const;
  [[nodiscard]] EdgeSet edges() const;
  [[nodiscard]] int min_degree() const;
  [[nodiscard]] int max_degree() const;

  /// Construction-time mutation; throws on self-loops or out-of-range ids.
  void add_edge(VertexId u, VertexId v);

  friend bool operator==(const Graph &a, const Graph &b);

private:
  void check_vertex(VertexId v) const;

  int order_ = 0;
  std::vector<VertexSet> rows_;
};

using Distance = std::uint8_t;
inline constexpr Distance kUnreachable = 0xFF;

/// All-pairs hop distances; kUnreachable marks pairs in different components.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int order) : order_(order), d_(static_cast<std::size_t>(order) * order, kUnreachable) {}

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] Distance operator()(VertexId u, VertexId v) const { return d_[static_cast<std::size_t>(u) * order_ + v]; }
  Distance &at(VertexId u, VertexId v) { return d_[static_cast<std::size_t>(u) * order_ + v]; }
  [[nodiscard]] std::span<const Distance> row(VertexId u) const {
    return {d_.data() + static_cast<std::size_t>(u) * order_, static_cast<std::size_t>(order_)};
  }

private:
  int order_ = 0;
  std::vector<Distance> d_;
};

/// Diameter value; nullopt stands for infinity (disconnected graph).
using Diameter = std::optional<int>;

DistanceMatrix distances(const Graph &g);
Diameter diameter(const Graph &g);
Diameter diameter(const DistanceMatrix &d);
bool is_connected(const Graph &g);

/// Vertices at distance exactly k from v.
VertexSet sphere(const DistanceMatrix &d, VertexId v, int k);

Graph add_edges(const Graph &g, const EdgeSet &e);
Graph join(const Graph &g, const Graph &h);
Graph power(const Graph &g, int k);
Graph complement(const Graph &g);
EdgeSet complement_edges(const Graph &g);
/// Disjoint union; h's vertices are shifted by |g|.
Graph disjoint_union(const Graph &g, const Graph &h);
/// Induced subgraph on the given vertices, relabelled 0..k-1 in the given order.
Graph induced(const Graph &g, std::span<const VertexId> vs);

// Families. Id layouts are part of the contract.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty_graph(int n);
/// Parts laid out consecutively: part i occupies the next x_i ids.
Graph complete_multipartite(std::span<const int> sizes);
/// Outer ring v_i = ids 0..n-1, inner ring u_i = ids n..2n-1.
Graph generalized_petersen(int n, int k);
Graph cycle_square(int n);
/// K_{1,3} with every edge subdivided t times. Centre = 0; leg j (0..2)
/// occupies ids 1 + j*(t+1) .. (j+1)*(t+1), ordered outward.
Graph subdivided_star(int t);

/// Exact maximum clique; the returned witness is the lexicographically
/// smallest maximum clique. Throws CapExceeded when order > cap.
std::vector<VertexId> max_clique(const Graph &g, int cap = 64);

/// Injective map from g's vertices into h preserving adjacency and
/// non-adjacency, or nullopt. Throws CapExceeded when |h| > cap.
std::optional<std::vector<VertexId>> is_induced_subgraph(const Graph &g, const Graph &h, int cap = 12);

} // namespace tdim
