#pragma once

#include <cstdint>
#include <vector>

#include "tdim/graph.hpp"

namespace tdim {

/// Subset of an ordered landmark list x_1..x_k; bit i stands for x_{i+1}.
using LandmarkSubset = std::uint32_t;

inline constexpr int kMaxShortlexWidth = 20;

/// All 2^k subsets of {x_1..x_k}: cardinality ascending, then
/// lexicographic with x_1 < ... < x_k.
std::vector<LandmarkSubset> shortlex_order(int k);

/// Cardinality descending, lexicographic ascending within a cardinality.
std::vector<LandmarkSubset> reverse_shortlex_order(int k);

/// Input of the assignment algorithms. The order of `landmarks` fixes
/// x_1..x_k; the order of `targets` fixes which empty-neighbourhood vertex
/// receives which subset.
struct AssignmentProblem {
  const Graph *graph = nullptr;
  std::vector<VertexId> landmarks;
  std::vector<VertexId> targets;
};

/// Throws std::invalid_argument naming the violated condition:
/// (i) landmarks and targets disjoint, (ii) |targets| <= 2^|landmarks|,
/// (iii) targets with nonempty landmark-neighbourhoods have distinct ones.
void validate(const AssignmentProblem &prob);

/// Edges giving every target a distinct landmark-neighbourhood. The j-th
/// target with empty neighbourhood receives the j-th unused subset in
/// shortlex order.
EdgeSet shortlex_assign(const AssignmentProblem &prob);

/// As shortlex_assign with the reverse ordering; if any target starts with an
/// empty neighbourhood, the first such target becomes adjacent to all landmarks.
EdgeSet reverse_shortlex_assign(const AssignmentProblem &prob);

} // namespace tdim
