#pragma once

// Builders and brute-force reference computations shared by the unit tests.
// The references deliberately avoid the library's cut primitives: they walk
// node masks and edge lists directly.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "kconn/cutlp.hpp"
#include "kconn/multigraph.hpp"

namespace kconn::testing {

inline MultiGraph complete_graph(int n, const Rational& cost = 1) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, cost);
  return g;
}

inline MultiGraph cycle_graph(int n, const Rational& cost = 1) {
  MultiGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, cost);
  return g;
}

inline MultiGraph path_graph(int n) {
  MultiGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, 1);
  return g;
}

inline Rational random_cost(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 4);
  int d = den(rng);
  std::uniform_int_distribution<int> num(d, 10 * d);
  return ratio(num(rng), d);
}

/// Random multigraph with a Hamiltonian cycle plus `extra` random edges;
/// multiplicities in [1, max_mult].
inline MultiGraph random_graph(int n, int extra, std::mt19937_64& rng, int max_mult = 1) {
  MultiGraph g(n);
  std::uniform_int_distribution<int> node(0, n - 1), mult(1, max_mult);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, random_cost(rng), mult(rng));
  for (int i = 0; i < extra; ++i) {
    int u = node(rng), v = node(rng);
    if (u == v) continue;
    g.add_edge(u, v, random_cost(rng), mult(rng));
  }
  return g;
}

inline bool in_mask(std::uint64_t mask, int v) { return (mask >> v) & 1U; }

/// Copies of `part` crossing the node mask.
inline std::int64_t brute_crossing(const MultiGraph& g, const EdgeCounts& part,
                                   std::uint64_t mask) {
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    auto it = part.find(e.id);
    if (it == part.end()) continue;
    if (in_mask(mask, e.u) != in_mask(mask, e.v)) total += it->second;
  }
  return total;
}

/// Sum of weights (bundle totals) crossing the node mask.
inline Rational brute_mass(const MultiGraph& g, const EdgeWeighting& w, std::uint64_t mask) {
  Rational total = 0;
  for (const Edge& e : g.edges()) {
    auto it = w.find(e.id);
    if (it == w.end()) continue;
    if (in_mask(mask, e.u) != in_mask(mask, e.v)) total += it->second;
  }
  return total;
}

/// Minimum crossing count over every cut; masks exclude node n-1.
inline std::int64_t brute_connectivity(const MultiGraph& g, const EdgeCounts& part) {
  const int n = g.node_count();
  std::int64_t best = INT64_MAX;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask)
    best = std::min(best, brute_crossing(g, part, mask));
  return best;
}

/// Residual demand written out from the definitions, clamped at 0.
inline std::int64_t reference_demand(std::int64_t d_i, int k, RelaxMode mode) {
  std::int64_t f = k - d_i;
  if (mode == RelaxMode::EvenRelax && d_i >= k - 2) f -= 2;
  if (mode == RelaxMode::HalfRelax && d_i >= k - 1) f -= 1;
  return std::max<std::int64_t>(0, f);
}

/// Node masks (excluding node n-1) of every cut whose row is violated by x.
inline std::vector<std::uint64_t> brute_violated(const EdgeWeighting& x, const SolverState& s) {
  const MultiGraph& g = *s.graph;
  const int n = g.node_count();
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::int64_t d_i = brute_crossing(g, s.integral, mask);
    if (brute_mass(g, x, mask) < reference_demand(d_i, s.k, s.mode)) out.push_back(mask);
  }
  return out;
}

}  // namespace kconn::testing
