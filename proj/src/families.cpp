#include <numeric>
#include <stdexcept>
#include <string>

#include "tdim/graph.hpp"

namespace tdim {

namespace {

void require(bool ok, const std::string &what) {
  if (!ok)
    throw std::invalid_argument(what);
}

} // namespace

Graph path(int n) {
  require(n >= 1, "path requires n >= 1");
  Graph g(n);
  for (VertexId v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle requires n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  require(n >= 1, "complete graph requires n >= 1");
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) {
  require(n >= 1, "empty graph requires n >= 1");
  return Graph(n);
}

Graph complete_multipartite(std::span<const int> sizes) {
  require(!sizes.empty(), "complete multipartite graph needs at least one part");
  for (int x : sizes)
    require(x >= 1, "partition sizes must be positive");
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  Graph g(n);
  std::vector<int> part(n);
  int id = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (int j = 0; j < sizes[i]; ++j)
      part[id++] = static_cast<int>(i);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (part[u] != part[v])
        g.add_edge(u, v);
  return g;
}

Graph generalized_petersen(int n, int k) {
  require(n >= 3 && k >= 1 && k < n, "generalized Petersen graph requires n >= 3 and 1 <= k < n");
  require(2 * k != n, "generalized Petersen graph with 2k = n is not simple-cubic");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + k) % n);
  }
  return g;
}

Graph cycle_square(int n) { return power(cycle(n), 2); }

Graph subdivided_star(int t) {
  require(t >= 0, "subdivision count must be non-negative");
  const int leg = t + 1;
  Graph g(1 + 3 * leg);
  for (int j = 0; j < 3; ++j) {
    VertexId prev = 0;
    for (int s = 0; s < leg; ++s) {
      VertexId cur = 1 + j * leg + s;
      g.add_edge(prev, cur);
      prev = cur;
    }
  }
  return g;
}

} // namespace tdim
