#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "combinations.hpp"
#include "tdim/errors.hpp"
#include "tdim/resolve.hpp"
#include "tdim/threshold.hpp"

namespace tdim {

namespace {

using Subset = std::uint32_t;
constexpr std::size_t kChunk = 256;

// All subsets of r complement edges by popcount, lexicographic within a level.
std::vector<Subset> ordered_subsets(int r) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << r);
  for (int c = 0; c <= r; ++c)
    detail::for_each_combination(r, c, [&](const std::vector<int> &idx) {
      Subset s = 0;
      for (int i : idx)
        s |= Subset{1} << i;
      out.push_back(s);
      return false;
    });
  return out;
}

struct Best {
  int value;
  std::size_t index;
  VertexSet basis;
};

} // namespace

TauBounds tau_exact(const Graph &g, const Limits &limits) {
  const auto comp = complement_edges(g);
  const int r = static_cast<int>(comp.size());
  if (r > limits.max_complement_edges)
    throw CapExceeded("tau_exact: " + std::to_string(r) + " complement edges exceed cap " +
                      std::to_string(limits.max_complement_edges));
  if (g.order() > limits.max_order)
    throw CapExceeded("tau_exact: order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(limits.max_order));

  const Certificate lower_cert = tau_lower_bound(g, limits);
  const int lower = lower_cert.value;
  const auto beta = metric_dimension(g, limits.max_order);
  const auto subsets = ordered_subsets(r);
  const std::vector<Edge> items(comp.begin(), comp.end());

  auto edges_of = [&](Subset s) {
    EdgeSet e;
    for (int i = 0; i < r; ++i)
      if (s & (Subset{1} << i))
        e.insert(items[i]);
    return e;
  };

  std::mutex mu;
  Best best{beta.beta, 0, beta.basis};
  std::atomic<std::size_t> next{1};

  auto work = [&] {
    while (true) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= subsets.size())
        return;
      const std::size_t end = std::min(subsets.size(), begin + kChunk);
      for (std::size_t idx = begin; idx < end; ++idx) {
        int target;
        {
          std::lock_guard lock(mu);
          if (best.value <= lower && idx > best.index)
            return;
          target = idx < best.index ? best.value : best.value - 1;
        }
        if (target < lower)
          continue;
        const auto d = distances(add_edges(g, edges_of(subsets[idx])));
        const auto found = smallest_resolving_set(d, lower, target);
        if (!found)
          continue;
        std::lock_guard lock(mu);
        if (found->beta < best.value || (found->beta == best.value && idx < best.index))
          best = Best{found->beta, idx, found->basis};
      }
    }
  };

  int workers = limits.workers > 0 ? limits.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, 64);
  if (subsets.size() < 4 * kChunk)
    workers = 1;
  {
    std::vector<std::jthread> pool;
    for (int i = 1; i < workers; ++i)
      pool.emplace_back(work);
    work();
  }

  TauBounds out;
  out.lower = best.value;
  out.lower_certificate.kind = CertificateKind::Exhaustive;
  out.lower_certificate.value = best.value;
  out.upper = best.value;
  out.witness = UpperWitness{edges_of(subsets[best.index]), best.basis, "exhaustive"};
  out.exact = best.value;
  out.complete_search = true;
  return out;
}

} // namespace tdim
