#include <algorithm>
#include <random>
#include <stdexcept>

#include "kconn/cli.hpp"

namespace kconn::cli {
namespace {

constexpr int kMaxAttempts = 1000;

template <class Rng>
std::size_t pick_index(Rng& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

}  // namespace

Instance generate_instance(int n, int m, int k, const Rational& cost_min,
                           const Rational& cost_max, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen: need at least 2 nodes");
  if (k < 1) throw std::invalid_argument("gen: k must be positive");
  if (m < 1) throw std::invalid_argument("gen: need at least one edge");
  if (cost_min < 0 || cost_max < cost_min) throw std::invalid_argument("gen: bad cost range");
  if (2L * m < static_cast<long>(n) * k) {
    throw std::invalid_argument("gen: " + std::to_string(m) + " edges cannot give " +
                                std::to_string(n) + " nodes degree " + std::to_string(k));
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<int> degree(n, 0);
    std::vector<std::vector<int>> adjacent(n, std::vector<int>(n, 0));
    std::vector<std::pair<int, int>> pairs;
    auto add = [&](int u, int v) {
      pairs.emplace_back(std::min(u, v), std::max(u, v));
      ++degree[u];
      ++degree[v];
      ++adjacent[u][v];
      ++adjacent[v][u];
    };

    // Balanced phase: keep degrees even so that minimum degree reaches k.
    const int balanced = std::min(m, (n * k + 1) / 2);
    for (int e = 0; e < balanced; ++e) {
      int low = *std::min_element(degree.begin(), degree.end());
      std::vector<int> lows;
      for (int v = 0; v < n; ++v) {
        if (degree[v] == low) lows.push_back(v);
      }
      int u = lows[pick_index(rng, lows.size())];
      std::vector<int> best;
      std::pair<int, int> best_key{0, 0};
      for (int v = 0; v < n; ++v) {
        if (v == u) continue;
        std::pair<int, int> key{adjacent[u][v], degree[v]};
        if (best.empty() || key < best_key) {
          best = {v};
          best_key = key;
        } else if (key == best_key) {
          best.push_back(v);
        }
      }
      add(u, best[pick_index(rng, best.size())]);
    }
    for (int e = balanced; e < m; ++e) {
      int u = static_cast<int>(pick_index(rng, n));
      int v = static_cast<int>(pick_index(rng, n - 1));
      if (v >= u) ++v;
      add(u, v);
    }

    MultiGraph g(n);
    for (auto [u, v] : pairs) {
      const long den = static_cast<long>(pick_index(rng, 4)) + 1;
      Rational lo = cost_min * den;
      Rational hi = cost_max * den;
      mpz_class num_lo, num_hi;
      mpz_cdiv_q(num_lo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      num_hi = floor_of(hi);
      long span = mpz_class(num_hi - num_lo).get_si();
      long offset = span > 0 ? static_cast<long>(pick_index(rng, span + 1)) : 0;
      Rational cost(mpz_class(num_lo + offset), mpz_class(den));
      cost.canonicalize();
      g.add_edge(u, v, cost);
    }
    if (edge_connectivity(g, g.all_copies()) >= k) return Instance{std::move(g), k};
  }
  throw std::invalid_argument("gen: no " + std::to_string(k) + "-edge-connected sample after " +
                              std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace kconn::cli
