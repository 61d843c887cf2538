#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tdim/vertex_set.hpp"

namespace tdim {

enum class CertificateKind {
  Clique,        // contains K_c, so beta >= ceil(log2 c) in every supergraph
  Diam2,         // diameter <= 2 is inherited by supergraphs, beta >= g(n)
  MinDegree,     // minimum degree >= 4, no 2-basis anywhere above
  BallCount,     // every vertex excluded from a 2-basis by ball sizes
  PairExclusion, // ball exclusion plus forced-signature pair exclusion
  Exhaustive,    // all spanning supergraphs enumerated
  NonPath,       // not a linear forest, so no supergraph has beta 1
};

std::string_view to_string(CertificateKind k);
std::optional<CertificateKind> certificate_kind_from_string(std::string_view s);

/// Two vertices z1 != z2 whose distances to the pair {x, y} are forced to
/// coincide in every supergraph where x and y gain no edges.
struct PairCollision {
  VertexId x = 0;
  VertexId y = 0;
  VertexId z1 = 0;
  VertexId z2 = 0;
};

/// A lower bound on beta or tau with a witness that can be re-checked from
/// the graph alone (see verify_certificate).
struct Certificate {
  CertificateKind kind = CertificateKind::Clique;
  int value = 0;
  /// Clique: the clique. BallCount / PairExclusion: the vertices excluded by
  /// the ball rule. NonPath: one vertex of degree >= 3, or a cycle.
  std::vector<VertexId> vertices;
  /// PairExclusion only: one collision per excluded surviving pair.
  std::vector<PairCollision> pairs;
};

} // namespace tdim
