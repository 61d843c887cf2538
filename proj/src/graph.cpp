#include "tdim/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdim {

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const auto &e : edges_)
    if (e.u == e.v)
      throw std::invalid_argument("edge set contains a self-loop at " + std::to_string(e.u));
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::insert(Edge e) {
  if (e.u == e.v)
    throw std::invalid_argument("self-loop at " + std::to_string(e.u));
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e)
    return false;
  edges_.insert(it, e);
  return true;
}

bool EdgeSet::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside [0, " + std::to_string(kMaxOrder) + "]");
  rows_.resize(order);
}

Graph::Graph(int order, const EdgeSet &edges) : Graph(order) {
  for (const auto &e : edges)
    add_edge(e.u, e.v);
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= order_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
}

void Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw std::invalid_argument("self-loop at " + std::to_string(u));
  rows_[u].insert(v);
  rows_[v].insert(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto &r : rows_)
    twice += r.size();
  return twice / 2;
}

EdgeSet Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < order_; ++u)
    for (VertexId v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1))
      out.emplace_back(u, v);
  return EdgeSet(std::move(out));
}

int Graph::min_degree() const {
  int m = order_ == 0 ? 0 : order_;
  for (VertexId v = 0; v < order_; ++v)
    m = std::min(m, degree(v));
  return m;
}

int Graph::max_degree() const {
  int m = 0;
  for (VertexId v = 0; v < order_; ++v)
    m = std::max(m, degree(v));
  return m;
}

bool operator==(const Graph &a, const Graph &b) { return a.order_ == b.order_ && a.rows_ == b.rows_; }

DistanceMatrix distances(const Graph &g) {
  const int n = g.order();
  DistanceMatrix d(n);
  for (VertexId s = 0; s < n; ++s) {
    VertexSet seen;
    seen.insert(s);
    VertexSet frontier = seen;
    d.at(s, s) = 0;
    for (int dist = 1; !frontier.empty(); ++dist) {
      VertexSet next;
      for (VertexId v : frontier)
        next |= g.neighbours(v);
      next -= seen;
      for (VertexId v : next)
        d.at(s, v) = static_cast<Distance>(dist);
      seen |= next;
      frontier = next;
    }
  }
  return d;
}

Diameter diameter(const DistanceMatrix &d) {
  int best = 0;
  for (VertexId u = 0; u < d.order(); ++u)
    for (VertexId v = u + 1; v < d.order(); ++v) {
      if (d(u, v) == kUnreachable)
        return std::nullopt;
      best = std::max<int>(best, d(u, v));
    }
  return best;
}

Diameter diameter(const Graph &g) { return diameter(distances(g)); }

bool is_connected(const Graph &g) { return diameter(g).has_value(); }

VertexSet sphere(const DistanceMatrix &d, VertexId v, int k) {
  VertexSet s;
  auto row = d.row(v);
  for (VertexId u = 0; u < d.order(); ++u)
    if (row[u] != kUnreachable && row[u] == k)
      s.insert(u);
  return s;
}

Graph add_edges(const Graph &g, const EdgeSet &e) {
  Graph h = g;
  for (const auto &edge : e) {
    if (edge.u < 0 || edge.v >= g.order())
      throw std::invalid_argument("edge (" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ") out of range");
    if (g.adjacent(edge.u, edge.v))
      throw std::invalid_argument("edge (" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ") already present");
    h.add_edge(edge.u, edge.v);
  }
  return h;
}

Graph join(const Graph &g, const Graph &h) {
  Graph r = disjoint_union(g, h);
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = 0; v < h.order(); ++v)
      r.add_edge(u, g.order() + v);
  return r;
}

Graph disjoint_union(const Graph &g, const Graph &h) {
  Graph r(g.order() + h.order());
  for (const auto &e : g.edges())
    r.add_edge(e.u, e.v);
  for (const auto &e : h.edges())
    r.add_edge(g.order() + e.u, g.order() + e.v);
  return r;
}

Graph induced(const Graph &g, std::span<const VertexId> vs) {
  Graph r(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j]))
        r.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return r;
}

Graph power(const Graph &g, int k) {
  if (k < 1)
    throw std::invalid_argument("graph power requires k >= 1");
  const auto d = distances(g);
  Graph r(g.order());
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v)
      if (d(u, v) != kUnreachable && d(u, v) <= k)
        r.add_edge(u, v);
  return r;
}

Graph complement(const Graph &g) { return Graph(g.order(), complement_edges(g)); }

EdgeSet complement_edges(const Graph &g) {
  std::vector<Edge> out;
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v))
        out.emplace_back(u, v);
  return EdgeSet(std::move(out));
}

} // namespace tdim
