#include <string>

#include "tdim/errors.hpp"
#include "tdim/graph.hpp"

namespace tdim {

namespace {

// Greedy colouring of the candidate set; the colour count bounds the
// largest clique inside it.
int colour_bound(const Graph &g, VertexSet cand) {
  int colours = 0;
  while (!cand.empty()) {
    ++colours;
    VertexSet avail = cand;
    while (!avail.empty()) {
      VertexId v = avail.first();
      cand.erase(v);
      avail.erase(v);
      avail -= g.neighbours(v);
    }
  }
  return colours;
}

struct CliqueSearch {
  const Graph &g;
  std::vector<VertexId> current;
  std::vector<VertexId> best;

  // Candidates are explored in ascending id order, so the first clique that
  // reaches the final maximum size is the lexicographically smallest one.
  void expand(const VertexSet &cand) {
    if (current.size() > best.size())
      best = current;
    if (cand.empty())
      return;
    if (current.size() + cand.size() <= best.size())
      return;
    if (current.size() + colour_bound(g, cand) <= best.size())
      return;
    VertexSet rest = cand;
    for (VertexId v : cand) {
      if (current.size() + rest.size() <= best.size())
        return;
      rest.erase(v);
      current.push_back(v);
      expand(rest & g.neighbours(v));
      current.pop_back();
    }
  }
};

struct InducedSearch {
  const Graph &g;
  const Graph &h;
  std::vector<VertexId> map;
  VertexSet used;

  bool extend(VertexId i) {
    if (i == g.order())
      return true;
    for (VertexId cand = 0; cand < h.order(); ++cand) {
      if (used.contains(cand))
        continue;
      bool ok = true;
      for (VertexId j = 0; j < i && ok; ++j)
        ok = g.adjacent(i, j) == h.adjacent(cand, map[j]);
      if (!ok)
        continue;
      map[i] = cand;
      used.insert(cand);
      if (extend(i + 1))
        return true;
      used.erase(cand);
    }
    return false;
  }
};

} // namespace

std::vector<VertexId> max_clique(const Graph &g, int cap) {
  if (g.order() > cap)
    throw CapExceeded("max_clique: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  CliqueSearch s{g, {}, {}};
  s.expand(g.vertices());
  return s.best;
}

std::optional<std::vector<VertexId>> is_induced_subgraph(const Graph &g, const Graph &h, int cap) {
  if (h.order() > cap)
    throw CapExceeded("is_induced_subgraph: order " + std::to_string(h.order()) + " exceeds cap " + std::to_string(cap));
  if (g.order() > h.order())
    return std::nullopt;
  InducedSearch s{g, h, std::vector<VertexId>(g.order(), -1), {}};
  if (s.extend(0))
    return s.map;
  return std::nullopt;
}

} // namespace tdim
