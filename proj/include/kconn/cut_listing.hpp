#pragma once

#include <cstdint>
#include <vector>

#include "kconn/multigraph.hpp"
#include "kconn/rational.hpp"

namespace kconn {

/// Dense symmetric nonnegative capacities on n nodes.
class CapacitatedInstance {
 public:
  explicit CapacitatedInstance(int n);

  /// Adds `capacity` to the pair {u, v}. Self-pairs are ignored.
  void add(int u, int v, const Rational& capacity);

  int node_count() const { return n_; }
  const Rational& capacity(int u, int v) const { return w_[u][v]; }
  const std::vector<std::vector<Rational>>& matrix() const { return w_; }
  Rational cut_capacity(const CutSet& s) const;

 private:
  int n_;
  std::vector<std::vector<Rational>> w_;
};

struct WeightedCut {
  CutSet cut;  // canonical
  Rational value;
};

/// Ascending by value, then by cut.
void sort_cuts(std::vector<WeightedCut>& cuts);

enum class CutListing { Auto, Exhaustive, Contraction };

struct ListingOptions {
  CutListing method = CutListing::Auto;
  std::uint64_t seed = 0;
  int exhaustive_limit = 16;  // Auto uses exhaustive listing up to this many nodes
  bool parallel = true;
};

namespace kernels {

/// Reference: evaluates each of the 2^(n-1)-1 cuts independently. n <= 30.
std::vector<WeightedCut> list_cuts_below_serial(const CapacitatedInstance& inst,
                                                const Rational& bound);

/// Gray-code walk over all cuts in fixed chunks, OpenMP across chunks.
/// Capacities are scaled to 64-bit integers when they fit. n <= 30.
std::vector<WeightedCut> list_cuts_below_parallel(const CapacitatedInstance& inst,
                                                  const Rational& bound);

/// Randomized contraction: every cut below `bound` is missed with probability
/// below 2^-40, given that `min_cut` is the global minimum and
/// bound <= 2 * min_cut. Trials are seeded from `seed` and the trial index.
std::vector<WeightedCut> list_cuts_below_contraction(const CapacitatedInstance& inst,
                                                     const Rational& bound,
                                                     const Rational& min_cut,
                                                     std::uint64_t seed, bool parallel);

/// Number of contraction trials the listing above performs.
long contraction_trials(int n, double ratio);

}  // namespace kernels
}  // namespace kconn
