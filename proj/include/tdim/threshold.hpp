#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdim/certificate.hpp"
#include "tdim/graph.hpp"
#include "tdim/limits.hpp"
#include "tdim/numbers.hpp"

namespace tdim {

/// Edges to add to a graph together with a landmark set that resolves the
/// result. The bound it proves is landmarks.size().
struct UpperWitness {
  EdgeSet edges;
  VertexSet landmarks;
  std::string source;

  [[nodiscard]] int value() const { return landmarks.size(); }
};

/// True iff every witness edge is a non-edge of g and the landmarks resolve g + edges.
bool verify_witness(const Graph &g, const UpperWitness &w);

// --- Upper-bound constructions ----------------------------------------------

struct DistinctSupersetAssignment {
  EdgeSet edges;
  /// Landmark-neighbourhood given to each vertex outside the landmark set,
  /// indexed by vertex id (empty for landmarks).
  std::vector<VertexSet> assigned;
};

/// Gives every vertex outside `landmarks` a distinct landmark-neighbourhood
/// containing its current one. Preconditions (checked, named on failure):
/// 0 <= max_nbhd <= |W|-1, 2^(|W|-max_nbhd) >= n-|W|, and every vertex
/// outside W has at most max_nbhd neighbours in W. Supersets are scanned in
/// shortlex order and the first unused one is taken.
DistinctSupersetAssignment diammeth_construct(const Graph &g, const std::vector<VertexId> &landmarks, int max_nbhd);

struct DiametralBound {
  int diameter = 0;
  UpperWitness witness;
};

/// tau <= d when 2^(d-3) >= n - d, using one diametral path minus its far
/// endpoint as the landmark set. nullopt when disconnected or the condition fails.
std::optional<DiametralBound> diametral_bound(const Graph &g);

/// Closed-form threshold dimension of the complete multipartite graph with
/// the given part sizes. A single part is the edgeless graph (0 or 1).
int multipartite_tau(std::span<const int> sizes);

struct ThresholdGraph {
  Graph graph;
  VertexSet landmarks;
};

/// Supergraph of complete_multipartite(sizes) with a resolving set of size
/// multipartite_tau(sizes).
ThresholdGraph multipartite_threshold_graph(std::span<const int> sizes);

/// Proper colouring with colours 0..k-1: exact (minimum) up to `cap`
/// vertices, largest-degree-first greedy beyond.
std::vector<int> exact_colouring(const Graph &g, int cap = 16);
std::vector<int> greedy_colouring(const Graph &g);
std::vector<int> default_colouring(const Graph &g, int exact_cap = 16);

struct ChromaticBound {
  int colours = 0;
  std::vector<int> part_sizes;
  int formula = 0;   // k(f(n/k)+1)-1
  int partition = 0; // multipartite_tau(part_sizes)
};

/// Throws std::invalid_argument for improper or mis-sized colourings.
ChromaticBound chromatic_bound(const Graph &g, std::span<const int> colouring);

/// Witness for the partition bound: the multipartite threshold graph of the
/// colour classes, pulled back onto g.
UpperWitness chromatic_witness(const Graph &g, std::span<const int> colouring);

/// 4(f(n/4)+1)-1, the chromatic bound with four colours. Requires n >= 4.
int planar_bound(std::int64_t n);

/// Smallest d0 >= 1 with 2^(d0-2) + 1 > k.
int sharpness_d0(int k);

/// [l_d + 1, l_{d+1} + 1, ..., l_{d+1} + 1] (k parts), meeting the chromatic
/// bound with equality. Requires k >= 2 and d >= sharpness_d0(k).
std::vector<int> sharpness_family(int k, int d);

/// Searches landmark sets of the given size (lexicographic order) for one
/// whose outside vertices can be given distinct landmark-neighbourhood
/// supersets, by bipartite matching. Tries at most max_sets landmark sets.
std::optional<UpperWitness> neighbourhood_assignment_search(const Graph &g, int size, long long max_sets);

// --- Lower-bound certificates -----------------------------------------------

std::optional<Certificate> min_degree_bound(const Graph &g);
std::optional<Certificate> non_path_bound(const Graph &g);

/// tau >= 3 by excluding every vertex (ball sizes) or every surviving pair
/// (forced signatures) from a 2-basis of any supergraph.
std::optional<Certificate> no_two_basis_supergraph(const Graph &g);

/// Every applicable tau lower-bound certificate, in priority order:
/// MinDegree, Clique, Diam2, BallCount/PairExclusion, NonPath.
std::vector<Certificate> tau_lower_certificates(const Graph &g, const Limits &limits = {});

/// Highest-valued certificate; ties go to the earlier kind in priority order.
Certificate tau_lower_bound(const Graph &g, const Limits &limits = {});

/// Re-checks a certificate against g alone.
bool verify_certificate(const Graph &g, const Certificate &c, const Limits &limits = {});

// --- Threshold dimension ----------------------------------------------------

struct TauBounds {
  int lower = 0;
  Certificate lower_certificate;
  int upper = 0;
  UpperWitness witness;
  std::optional<int> exact;
  bool complete_search = false; // exhaustive enumeration finished
};

/// Certificates plus constructions; no exhaustive enumeration.
TauBounds tau_bounds(const Graph &g, const Limits &limits = {});

/// Exact tau by enumerating spanning supergraphs in (edge count, lex) order.
/// The witness is the first optimal supergraph in that order, independent of
/// the worker count. Throws CapExceeded above limits.max_complement_edges.
TauBounds tau_exact(const Graph &g, const Limits &limits = {});

} // namespace tdim
