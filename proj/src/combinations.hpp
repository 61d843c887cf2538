#pragma once

#include <vector>

namespace tdim::detail {

// Calls fn(idx) for every size-c subset of {0..r-1}, in lexicographic order
// of the sorted index vector. Stops early and returns true when fn does.
template <class Fn> bool for_each_combination(int r, int c, Fn &&fn) {
  if (c < 0 || c > r)
    return false;
  std::vector<int> idx(c);
  for (int i = 0; i < c; ++i)
    idx[i] = i;
  while (true) {
    if (fn(static_cast<const std::vector<int> &>(idx)))
      return true;
    int i = c - 1;
    while (i >= 0 && idx[i] == r - c + i)
      --i;
    if (i < 0)
      return false;
    ++idx[i];
    for (int j = i + 1; j < c; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace tdim::detail
