#include "tdim/irreducible.hpp"

#include <stdexcept>

#include "tdim/errors.hpp"
#include "tdim/numbers.hpp"
#include "tdim/shortlex.hpp"

namespace tdim {

namespace {

constexpr double kMaxCertifiedSets = 5e7;

std::vector<VertexId> id_range(int from, int count) {
  std::vector<VertexId> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = from + i;
  return out;
}

Graph join_pairs(Graph g, int k) {
  for (int i = 0; i < k; ++i)
    g = join(g, empty_graph(2));
  return g;
}

double binomial(int n, int r) {
  double c = 1;
  for (int i = 1; i <= r; ++i)
    c = c * (n - r + i) / i;
  return c;
}

// beta from a certified lower bound: a resolving set of that size is a basis.
BetaResult certified_beta(const Graph &g, const std::vector<Certificate> &certs, const Limits &limits) {
  int lower = 0;
  for (const auto &c : certs)
    lower = std::max(lower, c.value);
  const std::string why =
      "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(limits.max_order);
  if (lower < 1 || binomial(g.order(), lower) > kMaxCertifiedSets)
    throw CapExceeded("metric_dimension: " + why);
  if (auto r = smallest_resolving_set(distances(g), lower, lower))
    return *r;
  throw CapExceeded("metric_dimension: " + why + " and no resolving set meets the certified bound");
}

std::string beta_rule(int beta, int n) {
  if (beta == n - 1)
    return "beta=n-1";
  return "beta=" + std::to_string(beta);
}

} // namespace

Graph s_graph(int n) {
  if (n < 2)
    throw std::invalid_argument("s_graph requires n >= 2");
  const int g = g_of(n);
  Graph base = disjoint_union(complete(g), complete(n - g));
  AssignmentProblem prob{&base, id_range(0, g), id_range(g, n - g)};
  return add_edges(base, reverse_shortlex_assign(prob));
}

Graph s_graph_bs(int b, int s) {
  if (b < 2 || s < 1)
    throw std::invalid_argument("s_graph_bs requires b >= 2 and s >= 1");
  if (b > kMaxShortlexWidth || (1 << b) + b + s > kMaxOrder)
    throw std::invalid_argument("s_graph_bs order exceeds the supported maximum");
  const int clique = 1 << b;
  Graph base = disjoint_union(disjoint_union(empty_graph(b), complete(clique)), path(s));
  base.add_edge(0, b + clique);
  AssignmentProblem prob{&base, id_range(0, b), id_range(b, clique)};
  return add_edges(base, shortlex_assign(prob));
}

Graph join_k2bar(const Graph &g) { return join(g, empty_graph(2)); }

Graph join_k2(const Graph &g) { return join(g, complete(2)); }

Graph irreducible_of(int n, int b) {
  if (n < 2 || b < 1 || b >= n)
    throw std::invalid_argument("irreducible_of requires 1 <= b < n, got n=" + std::to_string(n) +
                                " b=" + std::to_string(b));
  if (b == 1)
    return path(n);
  const bool case1 = b < 30 && static_cast<long long>(n) > (1LL << b) + b;
  if (case1)
    return s_graph_bs(b, n - (1 << b) - b);
  if (n > 2 * b) {
    for (int k = 0; k < b; ++k) {
      const int d = b - k;
      const long long m = n - 2LL * k;
      if (m < 2)
        break;
      const long long lo = d - 1 >= 62 ? m + 1 : (1LL << (d - 1)) + d;
      const long long hi = d >= 62 ? m : (1LL << d) + d;
      if (lo <= m && m <= hi)
        return join_pairs(s_graph(static_cast<int>(m)), k);
    }
    throw std::logic_error("irreducible_of: no k satisfies the selector");
  }
  const int k = n - 1 - b;
  return join_pairs(complete(n - 2 * k), k);
}

Embedding embed_in_irreducible(const Graph &g) {
  const int n = g.order();
  int k = 0;
  while ((1 << k) <= n)
    ++k;
  // Smallest power of two strictly above n, so p >= 1.
  Embedding out;
  out.k = k;
  out.p = (1 << k) - n;
  const Graph gp = join(g, complete(out.p));
  Graph base = disjoint_union(gp, complete(k));
  AssignmentProblem prob{&base, id_range(gp.order(), k), id_range(0, gp.order())};
  out.graph = add_edges(base, shortlex_assign(prob));
  out.image = id_range(0, n);
  out.landmarks = VertexSet::from(prob.landmarks);
  return out;
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
  case VerdictStatus::Irreducible:
    return "Irreducible";
  case VerdictStatus::Reducible:
    return "Reducible";
  case VerdictStatus::Unknown:
    return "Unknown";
  }
  return "Unknown";
}

IrreducibilityVerdict is_irreducible(const Graph &g, const Limits &limits) {
  const int n = g.order();
  IrreducibilityVerdict v;
  const auto certs = tau_lower_certificates(g, limits);
  v.beta = n <= limits.max_order ? metric_dimension(g, limits.max_order) : certified_beta(g, certs, limits);
  const int beta = v.beta.beta;

  auto settle_irreducible = [&](const Certificate &c, std::string rule) {
    v.status = VerdictStatus::Irreducible;
    v.rule = std::move(rule);
    v.tau_bounds.lower = beta;
    v.tau_bounds.lower_certificate = c;
    v.tau_bounds.lower_certificate.value = beta;
    v.tau_bounds.upper = beta;
    v.tau_bounds.witness = UpperWitness{{}, v.beta.basis, "beta"};
    v.tau_bounds.exact = beta;
    return v;
  };

  auto meeting = [&]() -> const Certificate * {
    for (const auto &c : certs)
      if (c.value >= beta)
        return &c;
    return nullptr;
  };

  if (beta == 0) {
    Certificate c;
    return settle_irreducible(c, "beta=0");
  }
  if (beta == 1 || beta == 2 || beta == n - 1) {
    if (const auto *c = meeting())
      return settle_irreducible(*c, beta_rule(beta, n));
    // Only K_n has beta = n-1, and it has no proper spanning supergraph.
    auto exact = tau_exact(g, limits);
    return settle_irreducible(exact.lower_certificate, beta_rule(beta, n));
  }
  if (const auto *c = meeting())
    return settle_irreducible(*c, std::string(to_string(c->kind)));

  v.tau_bounds = tau_bounds(g, limits);
  if (v.tau_bounds.upper < beta) {
    v.status = VerdictStatus::Reducible;
    v.rule = v.tau_bounds.witness.source;
    return v;
  }
  if (static_cast<int>(complement_edges(g).size()) <= limits.max_complement_edges) {
    v.tau_bounds = tau_exact(g, limits);
    v.status = *v.tau_bounds.exact < beta ? VerdictStatus::Reducible : VerdictStatus::Irreducible;
    v.rule = "Exhaustive";
    return v;
  }
  v.status = VerdictStatus::Unknown;
  v.rule = "none";
  return v;
}

} // namespace tdim
