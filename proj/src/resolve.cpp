#include "tdim/resolve.hpp"

#include <algorithm>
#include <string>

#include "tdim/errors.hpp"
#include "tdim/numbers.hpp"

namespace tdim {

namespace {

// Partition of the vertex set into signature classes, refined one landmark
// at a time. Labels are dense in [0, classes).
class Refiner {
public:
  explicit Refiner(const DistanceMatrix &d) : d_(d), n_(d.order()), table_(static_cast<std::size_t>(n_) * (n_ + 1), -1) {}

  int refine(const std::vector<int> &in, std::vector<int> &out, VertexId landmark) {
    auto row = d_.row(landmark);
    out.resize(n_);
    int classes = 0;
    for (VertexId v = 0; v < n_; ++v) {
      const int code = row[v] == kUnreachable ? n_ : row[v];
      int &slot = table_[static_cast<std::size_t>(in[v]) * (n_ + 1) + code];
      if (slot < 0)
        slot = classes++;
      out[v] = slot;
    }
    for (VertexId v = 0; v < n_; ++v) {
      const int code = row[v] == kUnreachable ? n_ : row[v];
      table_[static_cast<std::size_t>(in[v]) * (n_ + 1) + code] = -1;
    }
    return classes;
  }

private:
  const DistanceMatrix &d_;
  int n_;
  std::vector<int> table_;
};

// Number of distinct distance symbols any landmark can produce.
int symbol_count(const DistanceMatrix &d) {
  int maxd = 0;
  bool inf = false;
  for (VertexId u = 0; u < d.order(); ++u)
    for (VertexId v = 0; v < d.order(); ++v) {
      if (d(u, v) == kUnreachable)
        inf = true;
      else
        maxd = std::max<int>(maxd, d(u, v));
    }
  return maxd + 1 + (inf ? 1 : 0);
}

class ResolvingSearch {
public:
  ResolvingSearch(const DistanceMatrix &d, std::vector<VertexId> candidates, int size)
      : d_(d), n_(d.order()), cand_(std::move(candidates)), size_(size), refiner_(d), symbols_(symbol_count(d)),
        labels_(size + 1) {}

  std::optional<VertexSet> run() {
    if (static_cast<int>(cand_.size()) < size_)
      return std::nullopt;
    labels_[0].assign(n_, 0);
    const int classes = n_ == 0 ? 0 : 1;
    if (dfs(0, 0, classes)) {
      VertexSet s;
      for (auto v : chosen_)
        s.insert(v);
      return s;
    }
    return std::nullopt;
  }

private:
  bool dfs(int depth, std::size_t start, int classes) {
    if (classes == n_) {
      // Already resolving: pad with the smallest remaining candidates.
      const std::size_t need = static_cast<std::size_t>(size_ - depth);
      if (cand_.size() - start < need)
        return false;
      for (std::size_t i = 0; i < need; ++i)
        chosen_.push_back(cand_[start + i]);
      return true;
    }
    if (depth == size_)
      return false;
    if (!can_reach(classes, size_ - depth))
      return false;
    for (std::size_t i = start; i + (size_ - depth) <= cand_.size(); ++i) {
      const VertexId w = cand_[i];
      const int next = refiner_.refine(labels_[depth], labels_[depth + 1], w);
      chosen_.push_back(w);
      if (dfs(depth + 1, i + 1, next))
        return true;
      chosen_.pop_back();
    }
    return false;
  }

  // Each landmark splits a class into at most symbols_ parts.
  bool can_reach(long long classes, int remaining) const {
    for (int r = 0; r < remaining && classes < n_; ++r)
      classes *= symbols_;
    return classes >= n_;
  }

  const DistanceMatrix &d_;
  int n_;
  std::vector<VertexId> cand_;
  int size_;
  Refiner refiner_;
  int symbols_;
  std::vector<std::vector<int>> labels_;
  std::vector<VertexId> chosen_;
};

} // namespace

Signature signature(const DistanceMatrix &d, VertexId v, std::span<const VertexId> landmarks) {
  Signature s;
  s.landmarks.assign(landmarks.begin(), landmarks.end());
  for (auto w : landmarks)
    s.dist.push_back(d(v, w));
  return s;
}

bool resolves(const DistanceMatrix &d, const VertexSet &w) {
  const int n = d.order();
  if (n <= 1)
    return true;
  Refiner r(d);
  std::vector<int> cur(n, 0), next;
  int classes = 1;
  for (VertexId x : w) {
    classes = r.refine(cur, next, x);
    cur.swap(next);
    if (classes == n)
      return true;
  }
  return classes == n;
}

bool resolves(const Graph &g, const VertexSet &w) { return resolves(distances(g), w); }

std::optional<std::pair<VertexId, VertexId>> first_unresolved_pair(const DistanceMatrix &d, const VertexSet &w) {
  const auto landmarks = w.to_vector();
  for (VertexId u = 0; u < d.order(); ++u)
    for (VertexId v = u + 1; v < d.order(); ++v) {
      bool same = true;
      for (auto x : landmarks)
        if (d(u, x) != d(v, x)) {
          same = false;
          break;
        }
      if (same)
        return std::pair{u, v};
    }
  return std::nullopt;
}

VertexSet basis_vertex_filter(const DistanceMatrix &d, int b) {
  VertexSet out;
  if (b < 1)
    return out;
  const int n = d.order();
  for (VertexId v = 0; v < n; ++v) {
    std::vector<int> count(n + 1, 0);
    int maxk = 0;
    for (VertexId u = 0; u < n; ++u)
      if (d(v, u) != kUnreachable) {
        ++count[d(v, u)];
        maxk = std::max<int>(maxk, d(v, u));
      }
    for (int k = 1; k <= maxk; ++k) {
      // (2k+1)^(b-1), saturated at n since no sphere exceeds n - 1 vertices.
      long long cap = 1;
      for (int i = 1; i < b && cap < n; ++i)
        cap *= 2 * k + 1;
      if (count[k] > cap) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

VertexSet basis_vertex_filter(const Graph &g, int b) { return basis_vertex_filter(distances(g), b); }

std::optional<BetaResult> smallest_resolving_set(const DistanceMatrix &d, int lo, int hi) {
  const int n = d.order();
  lo = std::max(lo, 0);
  hi = std::min(hi, n);
  for (int b = lo; b <= hi; ++b) {
    if (b == 0) {
      if (n <= 1)
        return BetaResult{0, {}};
      continue;
    }
    const VertexSet excluded = basis_vertex_filter(d, b);
    std::vector<VertexId> cand;
    for (VertexId v = 0; v < n; ++v)
      if (!excluded.contains(v))
        cand.push_back(v);
    if (auto found = ResolvingSearch(d, std::move(cand), b).run())
      return BetaResult{b, *found};
  }
  return std::nullopt;
}

BetaResult metric_dimension(const Graph &g, int max_order) {
  if (g.order() > max_order)
    throw CapExceeded("metric_dimension: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(max_order));
  auto r = smallest_resolving_set(distances(g), 0, g.order());
  // V(g) always resolves, so the search cannot come back empty.
  return *r;
}

Certificate clique_lower_bound(const Graph &g, int clique_cap) {
  Certificate c;
  c.kind = CertificateKind::Clique;
  c.vertices = max_clique(g, clique_cap);
  c.value = c.vertices.empty() ? 0 : ceil_log2(static_cast<std::int64_t>(c.vertices.size()));
  return c;
}

std::optional<Certificate> diam2_lower_bound(const Graph &g) {
  if (g.order() < 2)
    return std::nullopt;
  const auto diam = diameter(g);
  if (!diam || *diam > 2)
    return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::Diam2;
  c.value = g_of(g.order());
  return c;
}

} // namespace tdim
