#include "tdim/shortlex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace tdim {

namespace {

// Size-c subsets of k elements in lexicographic order of their sorted index
// sequences.
void append_combinations(int k, int c, std::vector<LandmarkSubset> &out) {
  std::vector<int> idx(c);
  for (int i = 0; i < c; ++i)
    idx[i] = i;
  while (true) {
    LandmarkSubset s = 0;
    for (int i : idx)
      s |= LandmarkSubset{1} << i;
    out.push_back(s);
    int i = c - 1;
    while (i >= 0 && idx[i] == k - c + i)
      --i;
    if (i < 0)
      return;
    ++idx[i];
    for (int j = i + 1; j < c; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

void check_width(int k) {
  if (k < 0 || k > kMaxShortlexWidth)
    throw std::invalid_argument("shortlex ordering supports 0..20 landmarks, got " + std::to_string(k));
}

LandmarkSubset neighbourhood_mask(const Graph &g, VertexId v, const std::vector<VertexId> &landmarks) {
  LandmarkSubset m = 0;
  for (std::size_t i = 0; i < landmarks.size(); ++i)
    if (g.adjacent(v, landmarks[i]))
      m |= LandmarkSubset{1} << i;
  return m;
}

EdgeSet assign(const AssignmentProblem &prob, const std::vector<LandmarkSubset> &order) {
  validate(prob);
  const Graph &g = *prob.graph;
  std::unordered_set<LandmarkSubset> taken;
  std::vector<VertexId> empties;
  for (auto v : prob.targets) {
    const auto m = neighbourhood_mask(g, v, prob.landmarks);
    if (m == 0)
      empties.push_back(v);
    else
      taken.insert(m);
  }
  EdgeSet out;
  std::size_t next = 0;
  for (auto v : empties) {
    while (taken.contains(order[next]))
      ++next;
    const LandmarkSubset s = order[next++];
    for (std::size_t i = 0; i < prob.landmarks.size(); ++i)
      if (s & (LandmarkSubset{1} << i))
        out.insert(Edge(v, prob.landmarks[i]));
  }
  return out;
}

} // namespace

std::vector<LandmarkSubset> shortlex_order(int k) {
  check_width(k);
  std::vector<LandmarkSubset> out;
  out.reserve(std::size_t{1} << k);
  for (int c = 0; c <= k; ++c)
    append_combinations(k, c, out);
  return out;
}

std::vector<LandmarkSubset> reverse_shortlex_order(int k) {
  check_width(k);
  std::vector<LandmarkSubset> out;
  out.reserve(std::size_t{1} << k);
  for (int c = k; c >= 0; --c)
    append_combinations(k, c, out);
  return out;
}

void validate(const AssignmentProblem &prob) {
  if (prob.graph == nullptr)
    throw std::invalid_argument("assignment problem has no graph");
  const Graph &g = *prob.graph;
  check_width(static_cast<int>(prob.landmarks.size()));
  VertexSet w, p;
  for (auto v : prob.landmarks) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("landmark " + std::to_string(v) + " out of range");
    if (w.contains(v))
      throw std::invalid_argument("duplicate landmark " + std::to_string(v));
    w.insert(v);
  }
  for (auto v : prob.targets) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("target " + std::to_string(v) + " out of range");
    if (p.contains(v))
      throw std::invalid_argument("duplicate target " + std::to_string(v));
    p.insert(v);
  }
  if (w.intersects(p))
    throw std::invalid_argument("condition (i) violated: landmarks and targets intersect");
  if (prob.targets.size() > (std::size_t{1} << prob.landmarks.size()))
    throw std::invalid_argument("condition (ii) violated: " + std::to_string(prob.targets.size()) + " targets exceed 2^" +
                                std::to_string(prob.landmarks.size()) + " subsets");
  std::unordered_set<LandmarkSubset> seen;
  for (auto v : prob.targets) {
    const auto m = neighbourhood_mask(g, v, prob.landmarks);
    if (m != 0 && !seen.insert(m).second)
      throw std::invalid_argument("condition (iii) violated: target " + std::to_string(v) +
                                  " repeats a nonempty landmark-neighbourhood");
  }
}

EdgeSet shortlex_assign(const AssignmentProblem &prob) {
  return assign(prob, shortlex_order(static_cast<int>(prob.landmarks.size())));
}

EdgeSet reverse_shortlex_assign(const AssignmentProblem &prob) {
  return assign(prob, reverse_shortlex_order(static_cast<int>(prob.landmarks.size())));
}

} // namespace tdim
