#include "tdim/threshold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "combinations.hpp"
#include "tdim/errors.hpp"
#include "tdim/resolve.hpp"
#include "tdim/shortlex.hpp"

namespace tdim {

namespace {

using Mask = std::uint64_t;
constexpr int kMaxMaskWidth = 63;

Mask landmark_mask(const Graph &g, VertexId v, const std::vector<VertexId> &landmarks) {
  Mask m = 0;
  for (std::size_t i = 0; i < landmarks.size(); ++i)
    if (g.adjacent(v, landmarks[i]))
      m |= Mask{1} << i;
  return m;
}

// 2^e >= rhs, without overflow.
bool pow2_at_least(int e, long long rhs) {
  if (rhs <= 0)
    return true;
  if (e < 0)
    return false;
  if (e >= 62)
    return true;
  return (1LL << e) >= rhs;
}

// Supersets of `base` within `width` bits in shortlex order; fn returns true to stop.
template <class Fn> void for_each_superset(Mask base, int width, Fn &&fn) {
  std::vector<int> free;
  for (int i = 0; i < width; ++i)
    if (!(base & (Mask{1} << i)))
      free.push_back(i);
  const int r = static_cast<int>(free.size());
  for (int c = 0; c <= r; ++c) {
    const bool stop = detail::for_each_combination(r, c, [&](const std::vector<int> &idx) {
      Mask s = base;
      for (int i : idx)
        s |= Mask{1} << free[i];
      return fn(s);
    });
    if (stop)
      return;
  }
}

EdgeSet edges_for(VertexId v, Mask add, const std::vector<VertexId> &landmarks) {
  EdgeSet out;
  for (std::size_t i = 0; i < landmarks.size(); ++i)
    if (add & (Mask{1} << i))
      out.insert(Edge(v, landmarks[i]));
  return out;
}

VertexSet mask_to_set(Mask m, const std::vector<VertexId> &landmarks) {
  VertexSet s;
  for (std::size_t i = 0; i < landmarks.size(); ++i)
    if (m & (Mask{1} << i))
      s.insert(landmarks[i]);
  return s;
}

void merge_into(EdgeSet &dst, const EdgeSet &src) {
  for (const auto &e : src)
    dst.insert(e);
}

// Kuhn's augmenting-path matching of outside vertices to distinct supersets
// of their landmark-neighbourhoods.
class SupersetMatcher {
public:
  SupersetMatcher(std::vector<Mask> base, int width) : base_(std::move(base)), width_(width), options_(base_.size()) {
    // The first |P|+1 supersets of each vertex preserve Hall's condition.
    const std::size_t keep = base_.size() + 1;
    for (std::size_t v = 0; v < base_.size(); ++v)
      for_each_superset(base_[v], width_, [&](Mask s) {
        options_[v].push_back(s);
        return options_[v].size() >= keep;
      });
  }

  std::optional<std::vector<Mask>> solve() {
    for (std::size_t v = 0; v < base_.size(); ++v) {
      visited_.clear();
      if (!augment(v))
        return std::nullopt;
    }
    std::vector<Mask> out(base_.size());
    for (const auto &[s, v] : owner_)
      out[v] = s;
    return out;
  }

private:
  bool augment(std::size_t v) {
    for (Mask s : options_[v]) {
      if (!visited_.insert(s).second)
        continue;
      auto it = owner_.find(s);
      if (it == owner_.end() || augment(it->second)) {
        owner_[s] = v;
        return true;
      }
    }
    return false;
  }

  std::vector<Mask> base_;
  int width_;
  std::vector<std::vector<Mask>> options_;
  std::unordered_map<Mask, std::size_t> owner_;
  std::unordered_set<Mask> visited_;
};

std::vector<VertexId> greedy_clique(const Graph &g) {
  std::vector<VertexId> c;
  VertexSet cand = g.vertices();
  while (!cand.empty()) {
    VertexId v = cand.first();
    c.push_back(v);
    cand &= g.neighbours(v);
  }
  return c;
}

bool colouring_search(const Graph &g, const std::vector<VertexId> &order, std::size_t i, int k, int used,
                      std::vector<int> &colour) {
  if (i == order.size())
    return true;
  const VertexId v = order[i];
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (VertexId u : g.neighbours(v))
      if (colour[u] == c) {
        ok = false;
        break;
      }
    if (!ok)
      continue;
    colour[v] = c;
    if (colouring_search(g, order, i + 1, k, std::max(used, c + 1), colour))
      return true;
    colour[v] = -1;
  }
  return false;
}

std::vector<VertexId> by_degree_desc(const Graph &g) {
  std::vector<VertexId> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  return order;
}

std::vector<std::vector<VertexId>> colour_classes(const Graph &g, std::span<const int> colouring) {
  if (static_cast<int>(colouring.size()) != g.order())
    throw std::invalid_argument("colouring has " + std::to_string(colouring.size()) + " entries for " +
                                std::to_string(g.order()) + " vertices");
  std::map<int, std::vector<VertexId>> classes;
  for (VertexId v = 0; v < g.order(); ++v)
    classes[colouring[v]].push_back(v);
  for (const auto &e : g.edges())
    if (colouring[e.u] == colouring[e.v])
      throw std::invalid_argument("improper colouring: edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") is monochromatic");
  std::vector<std::vector<VertexId>> out;
  for (auto &[c, vs] : classes)
    out.push_back(std::move(vs));
  return out;
}

bool ball_rule(const Graph &g, const DistanceMatrix &d, VertexId v) {
  if (g.degree(v) >= 4)
    return true;
  int ball = 0;
  for (VertexId u = 0; u < d.order(); ++u)
    if (d(v, u) == 1 || d(v, u) == 2)
      ++ball;
  return ball >= 9;
}

bool within2(Distance x) { return x != kUnreachable && x <= 2; }

// Two vertices whose distances to x and y are both forced (<= 2 in g) and equal.
std::optional<PairCollision> forced_collision(const Graph &g, const DistanceMatrix &d, VertexId x, VertexId y) {
  if (g.degree(x) != 3 || g.degree(y) != 3)
    return std::nullopt;
  std::map<std::pair<int, int>, VertexId> seen;
  for (VertexId z = 0; z < d.order(); ++z) {
    if (!within2(d(x, z)) || !within2(d(y, z)))
      continue;
    auto [it, fresh] = seen.emplace(std::pair<int, int>{d(x, z), d(y, z)}, z);
    if (!fresh)
      return PairCollision{x, y, it->second, z};
  }
  return std::nullopt;
}

} // namespace

bool verify_witness(const Graph &g, const UpperWitness &w) {
  for (const auto &e : w.edges)
    if (e.u < 0 || e.v >= g.order() || g.adjacent(e.u, e.v))
      return false;
  for (VertexId v : w.landmarks)
    if (v >= g.order())
      return false;
  return resolves(add_edges(g, w.edges), w.landmarks);
}

DistinctSupersetAssignment diammeth_construct(const Graph &g, const std::vector<VertexId> &landmarks, int max_nbhd) {
  const int n = g.order();
  const int m = static_cast<int>(landmarks.size());
  if (m < 1 || m > kMaxMaskWidth)
    throw std::invalid_argument("landmark set size must be in [1, 63]");
  VertexSet w;
  for (auto v : landmarks) {
    if (v < 0 || v >= n || w.contains(v))
      throw std::invalid_argument("landmark " + std::to_string(v) + " out of range or repeated");
    w.insert(v);
  }
  if (max_nbhd < 0 || max_nbhd > m - 1)
    throw std::invalid_argument("neighbourhood bound " + std::to_string(max_nbhd) + " outside [0, |W|-1]");
  if (!pow2_at_least(m - max_nbhd, n - m))
    throw std::invalid_argument("condition 2^(|W|-l) >= n-|W| fails");
  DistinctSupersetAssignment out;
  out.assigned.resize(n);
  std::unordered_set<Mask> used;
  for (VertexId v = 0; v < n; ++v) {
    if (w.contains(v))
      continue;
    const Mask base = landmark_mask(g, v, landmarks);
    if (std::popcount(base) > max_nbhd)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has more than " + std::to_string(max_nbhd) +
                                  " landmark neighbours");
    std::optional<Mask> pick;
    for_each_superset(base, m, [&](Mask s) {
      if (used.contains(s))
        return false;
      pick = s;
      return true;
    });
    if (!pick)
      throw std::logic_error("distinct superset assignment ran out of subsets");
    used.insert(*pick);
    merge_into(out.edges, edges_for(v, *pick & ~base, landmarks));
    out.assigned[v] = mask_to_set(*pick, landmarks);
  }
  if (!resolves(add_edges(g, out.edges), w))
    throw std::logic_error("distinct superset assignment did not resolve the graph");
  return out;
}

std::optional<DiametralBound> diametral_bound(const Graph &g) {
  const int n = g.order();
  const auto d = distances(g);
  const auto diam = diameter(d);
  if (!diam || n < 2)
    return std::nullopt;
  const int D = *diam;
  // 2^(D-3) >= n - D, compared without fractions when D < 3.
  const bool holds = D >= 3 ? pow2_at_least(D - 3, n - D) : (1LL >= static_cast<long long>(n - D) << (3 - D));
  if (!holds)
    return std::nullopt;
  VertexId a = -1, b = -1;
  for (VertexId u = 0; u < n && a < 0; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (d(u, v) == D) {
        a = u;
        b = v;
        break;
      }
  std::vector<VertexId> landmarks{a};
  VertexId cur = a;
  while (d(cur, b) > 1) {
    for (VertexId nb : g.neighbours(cur))
      if (d(nb, b) + 1 == d(cur, b)) {
        cur = nb;
        break;
      }
    landmarks.push_back(cur);
  }
  // landmarks = the diametral path without its far endpoint b.
  const auto assignment = diammeth_construct(g, landmarks, std::min(3, D - 1));
  DiametralBound out;
  out.diameter = D;
  out.witness.edges = assignment.edges;
  out.witness.landmarks = VertexSet::from(landmarks);
  out.witness.source = "diametral";
  return out;
}

int multipartite_tau(std::span<const int> sizes) {
  if (sizes.empty())
    throw std::invalid_argument("partition must have at least one part");
  for (int x : sizes)
    if (x < 1)
      throw std::invalid_argument("partition sizes must be positive");
  if (sizes.size() == 1)
    return sizes[0] >= 2 ? 1 : 0;
  int total = 0;
  bool at_ell = false;
  for (int x : sizes) {
    const int fx = f_of(Rational(x));
    total += fx;
    at_ell = at_ell || x == ell(fx);
  }
  return at_ell ? total - 1 : total;
}

ThresholdGraph multipartite_threshold_graph(std::span<const int> sizes) {
  const int tau = multipartite_tau(sizes);
  if (sizes.size() == 1) {
    if (sizes[0] == 1)
      return {Graph(1), {}};
    VertexSet w;
    w.insert(0);
    return {path(sizes[0]), w};
  }
  const Graph k = complete_multipartite(sizes);
  int reduced = -1;
  for (std::size_t i = 0; i < sizes.size() && reduced < 0; ++i)
    if (sizes[i] == ell(f_of(Rational(sizes[i]))))
      reduced = static_cast<int>(i);
  EdgeSet added;
  VertexSet landmarks;
  int start = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int count = f_of(Rational(sizes[i])) - (static_cast<int>(i) == reduced ? 1 : 0);
    AssignmentProblem prob{&k, {}, {}};
    for (int j = 0; j < sizes[i]; ++j) {
      if (j < count) {
        prob.landmarks.push_back(start + j);
        landmarks.insert(start + j);
      } else {
        prob.targets.push_back(start + j);
      }
    }
    merge_into(added, shortlex_assign(prob));
    start += sizes[i];
  }
  ThresholdGraph out{add_edges(k, added), landmarks};
  if (landmarks.size() != tau || !resolves(out.graph, landmarks))
    throw std::logic_error("multipartite threshold construction failed to resolve");
  return out;
}

std::vector<int> exact_colouring(const Graph &g, int cap) {
  if (g.order() > cap)
    throw CapExceeded("exact colouring: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  const auto order = by_degree_desc(g);
  for (int k = 1; k <= std::max(1, g.order()); ++k) {
    std::vector<int> colour(g.order(), -1);
    if (colouring_search(g, order, 0, k, 0, colour))
      return colour;
  }
  return std::vector<int>(g.order(), 0);
}

std::vector<int> greedy_colouring(const Graph &g) {
  std::vector<int> colour(g.order(), -1);
  for (VertexId v : by_degree_desc(g)) {
    std::vector<bool> taken(g.order() + 1, false);
    for (VertexId u : g.neighbours(v))
      if (colour[u] >= 0)
        taken[colour[u]] = true;
    int c = 0;
    while (taken[c])
      ++c;
    colour[v] = c;
  }
  return colour;
}

std::vector<int> default_colouring(const Graph &g, int exact_cap) {
  return g.order() <= exact_cap ? exact_colouring(g, exact_cap) : greedy_colouring(g);
}

ChromaticBound chromatic_bound(const Graph &g, std::span<const int> colouring) {
  if (g.order() < 1)
    throw std::invalid_argument("chromatic bound needs a nonempty graph");
  const auto classes = colour_classes(g, colouring);
  ChromaticBound out;
  out.colours = static_cast<int>(classes.size());
  for (const auto &c : classes)
    out.part_sizes.push_back(static_cast<int>(c.size()));
  out.formula = out.colours * (f_of(Rational(g.order(), out.colours)) + 1) - 1;
  out.partition = multipartite_tau(out.part_sizes);
  if (out.partition > out.formula)
    throw std::logic_error("partition bound exceeds the chromatic formula");
  return out;
}

UpperWitness chromatic_witness(const Graph &g, std::span<const int> colouring) {
  const auto classes = colour_classes(g, colouring);
  std::vector<int> sizes;
  std::vector<VertexId> to_g;
  for (const auto &c : classes) {
    sizes.push_back(static_cast<int>(c.size()));
    to_g.insert(to_g.end(), c.begin(), c.end());
  }
  const auto tg = multipartite_threshold_graph(sizes);
  UpperWitness out;
  for (const auto &e : tg.graph.edges()) {
    const Edge mapped(to_g[e.u], to_g[e.v]);
    if (!g.adjacent(mapped.u, mapped.v))
      out.edges.insert(mapped);
  }
  for (VertexId v : tg.landmarks)
    out.landmarks.insert(to_g[v]);
  out.source = "chromatic";
  return out;
}

int planar_bound(std::int64_t n) {
  if (n < 4)
    throw std::invalid_argument("planar bound requires n >= 4");
  return 4 * (f_of(Rational(n, 4)) + 1) - 1;
}

int sharpness_d0(int k) {
  if (k < 1)
    throw std::invalid_argument("sharpness family requires k >= 1");
  if (k == 1)
    return 1;
  int d = 2;
  while ((1LL << (d - 2)) + 1 <= k)
    ++d;
  return d;
}

std::vector<int> sharpness_family(int k, int d) {
  if (k < 2)
    throw std::invalid_argument("sharpness family requires k >= 2");
  const int d0 = sharpness_d0(k);
  if (d < d0)
    throw std::invalid_argument("sharpness family for k=" + std::to_string(k) + " requires d >= " + std::to_string(d0));
  std::vector<int> out(k, static_cast<int>(ell(d + 1) + 1));
  out[0] = static_cast<int>(ell(d) + 1);
  return out;
}

std::optional<UpperWitness> neighbourhood_assignment_search(const Graph &g, int size, long long max_sets) {
  const int n = g.order();
  if (size < 0 || size > n)
    return std::nullopt;
  if (size > kMaxMaskWidth)
    return std::nullopt;
  if (!pow2_at_least(size, n - size))
    return std::nullopt;
  std::optional<UpperWitness> found;
  long long tried = 0;
  detail::for_each_combination(n, size, [&](const std::vector<int> &idx) {
    if (++tried > max_sets)
      return true;
    std::vector<VertexId> landmarks(idx.begin(), idx.end());
    const VertexSet w = VertexSet::from(landmarks);
    std::vector<VertexId> outside;
    std::vector<Mask> base;
    for (VertexId v = 0; v < n; ++v)
      if (!w.contains(v)) {
        outside.push_back(v);
        base.push_back(landmark_mask(g, v, landmarks));
      }
    auto match = SupersetMatcher(base, size).solve();
    if (!match)
      return false;
    UpperWitness wit;
    for (std::size_t i = 0; i < outside.size(); ++i)
      merge_into(wit.edges, edges_for(outside[i], (*match)[i] & ~base[i], landmarks));
    wit.landmarks = w;
    wit.source = "assignment";
    if (!verify_witness(g, wit))
      throw std::logic_error("assignment search produced a non-resolving witness");
    found = std::move(wit);
    return true;
  });
  return found;
}

std::optional<Certificate> min_degree_bound(const Graph &g) {
  if (g.order() < 1 || g.min_degree() < 4)
    return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::MinDegree;
  c.value = 3;
  return c;
}

std::optional<Certificate> non_path_bound(const Graph &g) {
  Certificate c;
  c.kind = CertificateKind::NonPath;
  c.value = 2;
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 3) {
      c.vertices = {v};
      return c;
    }
  // Max degree <= 2: look for a component that is a cycle.
  VertexSet seen;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen.contains(s) || g.degree(s) != 2)
      continue;
    std::vector<VertexId> walk{s};
    seen.insert(s);
    VertexId prev = s, cur = g.neighbours(s).first();
    bool closed = false;
    while (true) {
      if (cur == s) {
        closed = true;
        break;
      }
      if (seen.contains(cur) || g.degree(cur) != 2)
        break;
      seen.insert(cur);
      walk.push_back(cur);
      VertexId nxt = -1;
      for (VertexId nb : g.neighbours(cur))
        if (nb != prev) {
          nxt = nb;
          break;
        }
      prev = cur;
      cur = nxt;
    }
    if (closed) {
      c.vertices = walk;
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> no_two_basis_supergraph(const Graph &g) {
  const int n = g.order();
  if (n < 2)
    return std::nullopt;
  const auto d = distances(g);
  Certificate c;
  std::vector<VertexId> survivors;
  for (VertexId v = 0; v < n; ++v) {
    if (ball_rule(g, d, v))
      c.vertices.push_back(v);
    else
      survivors.push_back(v);
  }
  for (std::size_t i = 0; i < survivors.size(); ++i)
    for (std::size_t j = i + 1; j < survivors.size(); ++j) {
      auto hit = forced_collision(g, d, survivors[i], survivors[j]);
      if (!hit)
        return std::nullopt;
      c.pairs.push_back(*hit);
    }
  if (c.vertices.empty() && c.pairs.empty())
    return std::nullopt;
  c.kind = c.pairs.empty() ? CertificateKind::BallCount : CertificateKind::PairExclusion;
  c.value = 3;
  return c;
}

std::vector<Certificate> tau_lower_certificates(const Graph &g, const Limits &limits) {
  std::vector<Certificate> out;
  if (auto c = min_degree_bound(g))
    out.push_back(*c);
  if (g.order() <= limits.max_clique_order) {
    out.push_back(clique_lower_bound(g, limits.max_clique_order));
  } else if (g.order() > 0) {
    Certificate c;
    c.kind = CertificateKind::Clique;
    c.vertices = greedy_clique(g);
    c.value = ceil_log2(static_cast<std::int64_t>(c.vertices.size()));
    out.push_back(c);
  }
  if (auto c = diam2_lower_bound(g))
    out.push_back(*c);
  if (auto c = no_two_basis_supergraph(g))
    out.push_back(*c);
  if (auto c = non_path_bound(g))
    out.push_back(*c);
  return out;
}

Certificate tau_lower_bound(const Graph &g, const Limits &limits) {
  const auto all = tau_lower_certificates(g, limits);
  Certificate best;
  best.kind = CertificateKind::Clique;
  best.value = -1;
  for (const auto &c : all)
    if (c.value > best.value)
      best = c;
  if (best.value < 0)
    best.value = 0;
  return best;
}

bool verify_certificate(const Graph &g, const Certificate &c, const Limits &limits) {
  const int n = g.order();
  switch (c.kind) {
  case CertificateKind::Clique: {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      if (c.vertices[i] < 0 || c.vertices[i] >= n)
        return false;
      for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
        if (!g.adjacent(c.vertices[i], c.vertices[j]))
          return false;
    }
    const int bound = c.vertices.empty() ? 0 : ceil_log2(static_cast<std::int64_t>(c.vertices.size()));
    return c.value <= bound;
  }
  case CertificateKind::Diam2: {
    const auto diam = diameter(g);
    return n >= 2 && diam && *diam <= 2 && c.value <= g_of(n);
  }
  case CertificateKind::MinDegree:
    return n >= 1 && g.min_degree() >= 4 && c.value <= 3;
  case CertificateKind::NonPath: {
    if (c.value > 2 || c.vertices.empty())
      return false;
    if (c.vertices.size() == 1)
      return c.vertices[0] >= 0 && c.vertices[0] < n && g.degree(c.vertices[0]) >= 3;
    if (c.vertices.size() < 3)
      return false;
    VertexSet distinct = VertexSet::from(c.vertices);
    if (distinct.size() != static_cast<int>(c.vertices.size()))
      return false;
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]))
        return false;
    return true;
  }
  case CertificateKind::BallCount:
  case CertificateKind::PairExclusion: {
    if (c.value > 3 || n < 2)
      return false;
    const auto d = distances(g);
    VertexSet excluded;
    for (VertexId v : c.vertices) {
      if (v < 0 || v >= n || !ball_rule(g, d, v))
        return false;
      excluded.insert(v);
    }
    std::map<std::pair<VertexId, VertexId>, PairCollision> cover;
    for (const auto &p : c.pairs)
      cover[{std::min(p.x, p.y), std::max(p.x, p.y)}] = p;
    bool any_pair = false;
    for (VertexId x = 0; x < n; ++x)
      for (VertexId y = x + 1; y < n; ++y) {
        if (excluded.contains(x) || excluded.contains(y))
          continue;
        auto it = cover.find({x, y});
        if (it == cover.end())
          return false;
        const auto &p = it->second;
        if (g.degree(x) != 3 || g.degree(y) != 3 || p.z1 == p.z2 || p.z1 < 0 || p.z2 < 0 || p.z1 >= n || p.z2 >= n)
          return false;
        for (VertexId z : {p.z1, p.z2})
          if (!within2(d(x, z)) || !within2(d(y, z)))
            return false;
        if (d(x, p.z1) != d(x, p.z2) || d(y, p.z1) != d(y, p.z2))
          return false;
        any_pair = true;
      }
    return !excluded.empty() || any_pair;
  }
  case CertificateKind::Exhaustive: {
    if (static_cast<int>(complement_edges(g).size()) > limits.max_complement_edges)
      return false;
    return tau_exact(g, limits).exact.value_or(-1) >= c.value;
  }
  }
  return false;
}

TauBounds tau_bounds(const Graph &g, const Limits &limits) {
  TauBounds out;
  out.lower_certificate = tau_lower_bound(g, limits);
  out.lower = out.lower_certificate.value;
  std::optional<UpperWitness> best;
  auto offer = [&](UpperWitness w) {
    if (!best || w.value() < best->value())
      best = std::move(w);
  };
  if (g.order() <= limits.max_order) {
    const auto beta = metric_dimension(g, limits.max_order);
    offer(UpperWitness{{}, beta.basis, "beta"});
  }
  if (auto db = diametral_bound(g))
    offer(db->witness);
  if (g.order() >= 1)
    offer(chromatic_witness(g, default_colouring(g, limits.max_colouring_order)));
  for (int size = out.lower; best && size < best->value(); ++size)
    if (auto w = neighbourhood_assignment_search(g, size, limits.max_assignment_sets)) {
      offer(*w);
      break;
    }
  out.witness = *best;
  out.upper = best->value();
  if (out.lower == out.upper)
    out.exact = out.upper;
  return out;
}

} // namespace tdim
