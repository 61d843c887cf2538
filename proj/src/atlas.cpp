#include "tdim/atlas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tdim {

namespace {

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph &g) : g_(g), n_(g.order()), total_(n_ * (n_ - 1) / 2), used_(n_, false) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    place_.resize(n_);
  }

  CanonicalGraph run() {
    extend(0, 0);
    Graph out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (g_.adjacent(best_place_[i], best_place_[j]))
          out.add_edge(i, j);
    return {std::move(out), best_};
  }

private:
  // Positions 0..i-1 hold vertices; prefix holds the code bits of all pairs among them.
  void extend(int i, std::uint64_t prefix) {
    const int bits = i * (i - 1) / 2;
    if (found_ && prefix < (best_ >> (total_ - bits)))
      return;
    if (i == n_) {
      if (!found_ || prefix > best_) {
        best_ = prefix;
        best_place_ = place_;
        found_ = true;
      }
      return;
    }
    const int want = g_.degree(order_[i]);
    for (VertexId v = 0; v < n_; ++v) {
      if (used_[v] || g_.degree(v) != want)
        continue;
      std::uint64_t next = prefix;
      for (int j = 0; j < i; ++j)
        next = (next << 1) | (g_.adjacent(place_[j], v) ? 1 : 0);
      used_[v] = true;
      place_[i] = v;
      extend(i + 1, next);
      used_[v] = false;
    }
  }

  const Graph &g_;
  int n_;
  int total_;
  std::vector<VertexId> order_;
  std::vector<VertexId> place_;
  std::vector<VertexId> best_place_;
  std::vector<bool> used_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

} // namespace

CanonicalGraph canonical_form(const Graph &g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical_form supports order <= " + std::to_string(kMaxCanonicalOrder));
  return CanonicalSearch(g).run();
}

std::vector<CanonicalGraph> connected_atlas(int max_order) {
  if (max_order < 1 || max_order > kMaxAtlasOrder)
    throw std::invalid_argument("atlas order must be in [1, " + std::to_string(kMaxAtlasOrder) + "], got " +
                                std::to_string(max_order));
  std::vector<CanonicalGraph> out;
  std::vector<CanonicalGraph> layer{canonical_form(Graph(1))};
  out.insert(out.end(), layer.begin(), layer.end());
  // Every connected graph has a vertex whose removal leaves it connected.
  for (int n = 2; n <= max_order; ++n) {
    std::map<std::uint64_t, Graph> next;
    for (const auto &cg : layer) {
      const int m = cg.graph.order();
      for (std::uint32_t s = 1; s < (1u << m); ++s) {
        Graph h = disjoint_union(cg.graph, Graph(1));
        for (int v = 0; v < m; ++v)
          if (s & (1u << v))
            h.add_edge(v, m);
        auto c = canonical_form(h);
        next.try_emplace(c.code, std::move(c.graph));
      }
    }
    layer.clear();
    for (auto &[code, g] : next)
      layer.push_back({std::move(g), code});
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

} // namespace tdim
