#include "kconn/cut_listing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

#ifdef KCONN_HAVE_OPENMP
#include <omp.h>
#endif

namespace kconn {

CapacitatedInstance::CapacitatedInstance(int n)
    : n_(n), w_(n, std::vector<Rational>(n, Rational(0))) {
  if (n < 0) throw std::invalid_argument("negative node count");
}

void CapacitatedInstance::add(int u, int v, const Rational& capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  if (u == v) return;
  w_[u][v] += capacity;
  w_[v][u] += capacity;
}

Rational CapacitatedInstance::cut_capacity(const CutSet& s) const {
  std::vector<bool> side = s.side();
  Rational total = 0;
  for (int u = 0; u < n_; ++u) {
    if (!side[u]) continue;
    for (int v = 0; v < n_; ++v) {
      if (!side[v]) total += w_[u][v];
    }
  }
  return total;
}

void sort_cuts(std::vector<WeightedCut>& cuts) {
  std::sort(cuts.begin(), cuts.end(), [](const WeightedCut& a, const WeightedCut& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.cut < b.cut;
  });
}

namespace kernels {
namespace {

constexpr int kMaxEnumerationNodes = 30;
constexpr std::uint64_t kChunks = 64;

void require_enumerable(int n) {
  if (n < 2 || n > kMaxEnumerationNodes) {
    throw std::invalid_argument("exhaustive cut listing needs 2 <= n <= 30");
  }
}

// Walks gray codes i ^ (i >> 1) for i in [begin, end); bit b is node b, and
// node n-1 never enters S, so every proper cut is visited once in canonical form.
template <class V>
void gray_walk(const std::vector<std::vector<V>>& w, const std::vector<V>& degree,
               std::uint64_t begin, std::uint64_t end, const V& bound,
               std::vector<std::pair<std::uint64_t, V>>& out) {
  const int n = static_cast<int>(w.size());
  std::uint64_t mask = begin ^ (begin >> 1);
  std::vector<V> inside(n, V{});
  V value{};
  for (int v = 0; v < n; ++v) {
    if (!((mask >> v) & 1U)) continue;
    for (int u = 0; u < n; ++u) inside[u] += w[u][v];
  }
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) value += degree[v] - inside[v];
  }
  if (value < bound) out.emplace_back(mask, value);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const int v = __builtin_ctzll(i);
    mask ^= std::uint64_t{1} << v;
    if ((mask >> v) & 1U) {
      value += degree[v];
      value -= inside[v];
      value -= inside[v];
      for (int u = 0; u < n; ++u) inside[u] += w[u][v];
    } else {
      for (int u = 0; u < n; ++u) inside[u] -= w[u][v];
      value -= degree[v];
      value += inside[v];
      value += inside[v];
    }
    if (value < bound) out.emplace_back(mask, value);
  }
}

template <class V>
std::vector<std::pair<std::uint64_t, V>> chunked_walk(const std::vector<std::vector<V>>& w,
                                                      const V& bound) {
  const int n = static_cast<int>(w.size());
  std::vector<V> degree(n, V{});
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) degree[u] += w[u][v];
  }
  const std::uint64_t end = std::uint64_t{1} << (n - 1);
  const std::uint64_t total = end - 1;
  const std::uint64_t chunks = std::min<std::uint64_t>(kChunks, total);
  std::vector<std::vector<std::pair<std::uint64_t, V>>> found(chunks);
  const long long chunk_count = static_cast<long long>(chunks);
#ifdef KCONN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long c = 0; c < chunk_count; ++c) {
    std::uint64_t lo = 1 + total * static_cast<std::uint64_t>(c) / chunks;
    std::uint64_t hi = 1 + total * static_cast<std::uint64_t>(c + 1) / chunks;
    gray_walk(w, degree, lo, hi, bound, found[c]);
  }
  std::vector<std::pair<std::uint64_t, V>> merged;
  for (auto& part : found) {
    for (auto& item : part) merged.push_back(std::move(item));
  }
  return merged;
}

// Scales all capacities by the lcm of their denominators. Empty when the
// scaled total would not fit comfortably in 64 bits.
std::optional<std::pair<std::vector<std::vector<std::int64_t>>, mpz_class>> scale_to_integers(
    const CapacitatedInstance& inst) {
  const int n = inst.node_count();
  mpz_class lcm = 1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), inst.capacity(u, v).get_den_mpz_t());
    }
  }
  mpz_class total = 0;
  std::vector<std::vector<mpz_class>> big(n, std::vector<mpz_class>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Rational& c = inst.capacity(u, v);
      big[u][v] = c.get_num() * (lcm / c.get_den());
      big[v][u] = big[u][v];
      total += big[u][v];
    }
  }
  if (total >= (mpz_class(1) << 61)) return std::nullopt;
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) w[u][v] = big[u][v].get_si();
  }
  return std::make_pair(std::move(w), lcm);
}

}  // namespace

std::vector<WeightedCut> list_cuts_below_serial(const CapacitatedInstance& inst,
                                                const Rational& bound) {
  const int n = inst.node_count();
  require_enumerable(n);
  std::vector<WeightedCut> out;
  const std::uint64_t end = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    Rational value = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (((mask >> u) & 1U) != ((mask >> v) & 1U)) value += inst.capacity(u, v);
      }
    }
    if (value < bound) out.push_back({CutSet::from_mask(n, mask), value});
  }
  sort_cuts(out);
  return out;
}

std::vector<WeightedCut> list_cuts_below_parallel(const CapacitatedInstance& inst,
                                                  const Rational& bound) {
  const int n = inst.node_count();
  require_enumerable(n);
  std::vector<WeightedCut> out;
  if (auto scaled = scale_to_integers(inst)) {
    auto& [w, lcm] = *scaled;
    // For an integer c: c < B  <=>  c < ceil(B).
    Rational scaled_bound = bound * Rational(lcm);
    mpz_class ceil_bound;
    mpz_cdiv_q(ceil_bound.get_mpz_t(), scaled_bound.get_num_mpz_t(),
               scaled_bound.get_den_mpz_t());
    if (ceil_bound <= 0) return out;
    const mpz_class cap = mpz_class(1) << 62;
    std::int64_t b = ceil_bound >= cap ? cap.get_si() : ceil_bound.get_si();
    for (auto& [mask, value] : chunked_walk<std::int64_t>(w, b)) {
      out.push_back({CutSet::from_mask(n, mask), Rational(mpz_class(value), lcm)});
      out.back().value.canonicalize();
    }
  } else {
    for (auto& [mask, value] : chunked_walk<Rational>(inst.matrix(), bound)) {
      out.push_back({CutSet::from_mask(n, mask), std::move(value)});
    }
  }
  sort_cuts(out);
  return out;
}

long contraction_trials(int n, double ratio) {
  const double two_alpha = 2.0 * ratio;
  const int keep = std::max(2, static_cast<int>(std::floor(two_alpha)) + 1);
  if (keep >= n) return 1;
  double log_survival = 0.0;
  for (int i = keep + 1; i <= n; ++i) log_survival += std::log1p(-two_alpha / i);
  const double survival = std::exp(log_survival);
  const double needed = 40.0 * std::log(2.0) / -std::log1p(-survival);
  return static_cast<long>(std::ceil(needed));
}

std::vector<WeightedCut> list_cuts_below_contraction(const CapacitatedInstance& inst,
                                                     const Rational& bound,
                                                     const Rational& min_cut,
                                                     std::uint64_t seed, bool parallel) {
  const int n = inst.node_count();
  if (n < 2) throw std::invalid_argument("cut listing needs n >= 2");
  if (bound <= min_cut) return {};
  if (min_cut <= 0) throw std::invalid_argument("contraction listing needs a connected instance");
  const double ratio = to_double(bound / min_cut);
  const int keep = std::max(2, static_cast<int>(std::floor(2.0 * ratio)) + 1);
  if (keep >= n) return list_cuts_below_serial(inst, bound);

  struct WeightedPair {
    int u, v;
    double w;
  };
  std::vector<WeightedPair> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (inst.capacity(u, v) > 0) pairs.push_back({u, v, to_double(inst.capacity(u, v))});
    }
  }

  const long trials = contraction_trials(n, ratio);
  auto run_trial = [&](long t, std::map<CutSet, Rational>& found) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int groups = n;
    while (groups > keep) {
      double total = 0.0;
      for (const auto& p : pairs) {
        if (find(p.u) != find(p.v)) total += p.w;
      }
      std::uniform_real_distribution<double> pick(0.0, total);
      double target = pick(rng);
      const WeightedPair* chosen = nullptr;
      for (const auto& p : pairs) {
        if (find(p.u) == find(p.v)) continue;
        chosen = &p;
        target -= p.w;
        if (target < 0) break;
      }
      parent[find(chosen->u)] = find(chosen->v);
      --groups;
    }
    // Label groups so that the group holding node n-1 is last.
    std::vector<int> label(n, -1);
    std::vector<int> group_of(n);
    int next = 0;
    const int last_root = find(n - 1);
    for (int v = 0; v < n; ++v) {
      int r = find(v);
      if (r != last_root && label[r] < 0) label[r] = next++;
    }
    label[last_root] = next;
    for (int v = 0; v < n; ++v) group_of[v] = label[find(v)];
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << (keep - 1)); ++m) {
      std::vector<bool> side(n);
      for (int v = 0; v < n; ++v) side[v] = (m >> group_of[v]) & 1U;
      CutSet cut = CutSet::from_side(side);
      if (found.count(cut)) continue;
      Rational value = inst.cut_capacity(cut);
      if (value < bound) found.emplace(std::move(cut), std::move(value));
    }
  };

  std::map<CutSet, Rational> merged;
#ifdef KCONN_HAVE_OPENMP
  if (parallel) {
#pragma omp parallel
    {
      std::map<CutSet, Rational> local;
#pragma omp for schedule(static)
      for (long t = 0; t < trials; ++t) run_trial(t, local);
#pragma omp critical
      merged.merge(local);
    }
  } else {
    for (long t = 0; t < trials; ++t) run_trial(t, merged);
  }
#else
  (void)parallel;
  for (long t = 0; t < trials; ++t) run_trial(t, merged);
#endif
  std::vector<WeightedCut> out;
  for (auto& [cut, value] : merged) out.push_back({cut, value});
  sort_cuts(out);
  return out;
}

}  // namespace kernels
}  // namespace kconn
