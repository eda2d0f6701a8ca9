#pragma once

#include <optional>
#include <vector>

#include "kconn/cut_listing.hpp"
#include "kconn/cutlp.hpp"

namespace kconn {

/// Exact global minimum cut (Stoer-Wagner). Requires n >= 2.
WeightedCut global_min_cut(const CapacitatedInstance& inst);

/// Every proper cut (canonical, once per complement pair) with capacity
/// strictly below `bound`, ascending. When the minimum cut is positive,
/// `bound` may be at most twice it; otherwise std::invalid_argument.
std::vector<WeightedCut> enumerate_cuts_below(const CapacitatedInstance& inst,
                                              const Rational& bound,
                                              const ListingOptions& options = {});

/// Integral edges at their copy counts, fractional edges at x.
CapacitatedInstance mixed_capacities(const SolverState& state, const EdgeWeighting& x);

/// A cut whose LP row x(delta_F(S)) >= f(S) fails at x.
struct ViolatedCut {
  CutSet cut;
  std::int64_t integral_degree = 0;  // d_I(S)
  Rational lhs;                      // x(delta_F(S))
  std::int64_t demand = 0;           // f(S) > lhs

  Rational violation() const { return Rational(demand) - lhs; }
};

/// All violated cuts found by one separation pass, most violated first.
/// Empty iff x satisfies every cut row of the current LP.
///
/// With relaxation amount r (0, 2 or 1) a row is violated iff
/// d_I(S) <= k-r-1 and d_I(S) + x(delta_F(S)) < k. Phase one computes the
/// mixed minimum cut; anything below k-r is violated. Otherwise every cut is
/// at least k-r, so the cuts below k are near-minimum (k/(k-r) <= 2) and are
/// listed and filtered by d_I. Even relaxation with k = 3 instead contracts
/// the components of (V, I) and looks for an x-cut below 3 there; with k <= 2
/// there is nothing to check.
std::vector<ViolatedCut> find_violated_cuts(const EdgeWeighting& x, const SolverState& state,
                                            const ListingOptions& options = {});

std::optional<ViolatedCut> find_violated_cut(const EdgeWeighting& x, const SolverState& state,
                                             const ListingOptions& options = {});

}  // namespace kconn
