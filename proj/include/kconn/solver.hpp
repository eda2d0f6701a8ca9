#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "kconn/cutlp.hpp"
#include "kconn/separation.hpp"
#include "kconn/simplex.hpp"

namespace kconn {

enum class Algorithm { Bicriteria, ThreeHalves, Ecsm };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

/// One outer iteration: the LP size at its fully separated extreme point and
/// what the rounding step did with it.
struct IterationTrace {
  int iteration = 0;
  std::int64_t fractional = 0;  // |F| in copies when the LP was solved
  std::int64_t integral = 0;    // |I| in copies after the step
  std::int64_t rows = 0;
  std::int64_t integral_fixes = 0;
  std::int64_t zero_removals = 0;
  int separation_rounds = 0;
  Rational lp_value;

  friend bool operator==(const IterationTrace&, const IterationTrace&) = default;
};

struct Certification {
  bool cost_within_bound = false;
  bool connectivity_within_bound = false;
  bool direct_lp_certificate = false;  // cost against the LP the algorithm actually solved
  bool lp_scaling = true;              // tau_effective <= cost_factor * reference tau
  std::optional<bool> oracle_lp_agrees;      // full-enumeration LP equals the cutting-plane tau
  std::optional<bool> oracle_optimum_bound;  // cost <= factor * brute-force optimum

  bool all() const;
  friend bool operator==(const Certification&, const Certification&) = default;
};

struct RunReport {
  Algorithm algorithm = Algorithm::Bicriteria;
  int k = 0;
  int k_effective = 0;
  RelaxMode mode = RelaxMode::EvenRelax;
  std::optional<Rational> tau;  // bounded Cut-LP optimum at k on the input graph
  Rational tau_effective;       // Cut-LP optimum at k_effective on the graph actually solved
  Rational tau_unbounded;       // multi-subgraph Cut-LP optimum at k
  Rational cost;
  Rational cost_factor;
  Rational cost_bound;  // cost_factor * (tau, or tau_unbounded for ECSM)
  std::int64_t connectivity = 0;
  int connectivity_bound = 0;
  int iterations = 0;
  std::vector<IterationTrace> trace;
  EdgeCounts edges;
  std::int64_t extreme_points = 0;
  Certification certified;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct SolverOptions {
  ListingOptions listing;
  /// Re-check vertex-ness of every fully separated extreme point.
  bool verify_vertices = true;
  /// Called with every fully separated extreme point before it is rounded.
  std::function<void(const ExtremePoint&, const SolverState&)> on_extreme_point;
};

/// Optimum of the bounded Cut-LP (x_e <= multiplicity) at k, by cutting planes.
/// Throws InstanceInfeasible if g is not k-edge-connected.
Rational cut_lp_value(const MultiGraph& g, int k, const SolverOptions& options = {});

/// Optimum of the multi-subgraph Cut-LP (no upper bounds) at k. Throws
/// InstanceInfeasible if g is disconnected.
Rational ecsm_lp_value(const MultiGraph& g, int k, const SolverOptions& options = {});

/// Cutting-plane loop: solve, separate, add every violated row, repeat until
/// no cut is violated. The result is a vertex of the full LP of `state`.
ExtremePoint separated_extreme_point(WorkingLp& lp, const SolverState& state,
                                     const SolverOptions& options, int* rounds = nullptr);

/// Drops copies at 0 and fixes copies at 1 (or at >= 2/3 under HalfRelax).
/// Throws TheoremViolation if x has no such copy.
SolverState iterate_once(const SolverState& state, const ExtremePoint& x,
                         IterationTrace* trace = nullptr);

/// k even: cost <= tau, connectivity >= k-2.
RunReport solve_even(const MultiGraph& g, int k, const SolverOptions& options = {});

/// Even k as solve_even; odd k runs with k-1: cost <= (1-1/k) tau_k,
/// connectivity >= k-3.
RunReport solve(const MultiGraph& g, int k, const SolverOptions& options = {});

/// Any k: cost <= (3/2) tau, connectivity >= k-1.
RunReport solve_three_halves(const MultiGraph& g, int k, const SolverOptions& options = {});

/// Multi-subgraph version: every edge is offered k+p times (p = 2 for even k,
/// 3 for odd k) and the even algorithm runs at k+p. Cost <= (1+p/k) times the
/// multi-subgraph LP, connectivity >= k+p-2.
RunReport solve_ecsm(const MultiGraph& g, int k, const SolverOptions& options = {});

RunReport run_algorithm(Algorithm algorithm, const MultiGraph& g, int k,
                        const SolverOptions& options = {});

}  // namespace kconn
