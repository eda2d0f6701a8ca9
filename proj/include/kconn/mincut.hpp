#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kconn {

template <class Cap>
struct DenseMinCut {
  std::vector<bool> side;  // canonical: side[n-1] == false
  Cap value{};
};

/// Stoer-Wagner global minimum cut on a dense symmetric capacity matrix.
/// Deterministic: ties in the maximum-adjacency order go to the lowest index,
/// and the first phase cut achieving the minimum is kept.
template <class Cap>
DenseMinCut<Cap> stoer_wagner(std::vector<std::vector<Cap>> w) {
  const std::size_t n = w.size();
  if (n < 2) throw std::invalid_argument("stoer_wagner: need at least 2 nodes");

  std::vector<std::vector<int>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[i] = {static_cast<int>(i)};
  std::vector<bool> merged(n, false);

  DenseMinCut<Cap> best;
  bool have_best = false;
  std::vector<int> best_group;

  for (std::size_t phase = 0; phase + 1 < n; ++phase) {
    std::vector<Cap> attach(n, Cap{});
    std::vector<bool> added(n, false);
    int prev = -1;
    int last = -1;
    Cap last_attach{};
    const std::size_t active = n - phase;
    for (std::size_t step = 0; step < active; ++step) {
      int pick = -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (merged[v] || added[v]) continue;
        if (pick < 0 || attach[v] > attach[pick]) pick = static_cast<int>(v);
      }
      added[pick] = true;
      prev = last;
      last = pick;
      last_attach = attach[pick];
      for (std::size_t v = 0; v < n; ++v) {
        if (!merged[v] && !added[v]) attach[v] += w[pick][v];
      }
    }
    if (!have_best || last_attach < best.value) {
      have_best = true;
      best.value = last_attach;
      best_group = groups[last];
    }
    for (int x : groups[last]) groups[prev].push_back(x);
    groups[last].clear();
    for (std::size_t v = 0; v < n; ++v) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = Cap{};
    merged[last] = true;
  }

  best.side.assign(n, false);
  for (int x : best_group) best.side[x] = true;
  if (best.side[n - 1]) best.side.flip();
  return best;
}

}  // namespace kconn
