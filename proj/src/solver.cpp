#include "kconn/solver.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "kconn/errors.hpp"

namespace kconn {
namespace {

constexpr int kSeparationRoundLimit = 100000;

std::string dump_point(const SolverState& state, const ExtremePoint& x) {
  std::ostringstream out;
  out << "{\"k\": " << state.k << ", \"mode\": \"" << to_string(state.mode)
      << "\", \"iteration\": " << state.iteration << ", \"x\": {";
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    const EdgeId id = x.edges[i];
    out << (i ? ", " : "") << '"' << index_of(id) << "\": {\"value\": \""
        << to_fraction_string(x.values[i]) << "\", \"copies\": " << state.fractional.at(id)
        << "}";
  }
  out << "}}";
  return out.str();
}

void require_connectivity(const MultiGraph& g, int k) {
  if (g.node_count() < 2) throw std::invalid_argument("instance needs at least 2 nodes");
  ConnectivityCut mc = min_connectivity_cut(g, g.all_copies());
  if (mc.value < k) {
    throw InstanceInfeasible("instance is only " + std::to_string(mc.value) +
                                 "-edge-connected, " + std::to_string(k) + " required",
                             describe_cut(*mc.cut));
  }
}

Rational lp_optimum(const MultiGraph& g, int k, const SolverOptions& options) {
  require_connectivity(g, k);
  SolverState plain = SolverState::initial(g, k, RelaxMode::None);
  WorkingLp lp = WorkingLp::for_state(plain);
  lp.seed_degree_rows(plain);
  return separated_extreme_point(lp, plain, options).objective;
}

// Rounding threshold for a single fractional copy.
Rational rounding_threshold(RelaxMode mode) {
  return mode == RelaxMode::HalfRelax ? Rational(2, 3) : Rational(1);
}

struct IterativeRun {
  EdgeCounts integral;
  std::vector<IterationTrace> trace;
  Rational tau;
  std::int64_t extreme_points = 0;
};

IterativeRun run_iterative(const MultiGraph& g, int k, RelaxMode mode,
                           const SolverOptions& options) {
  require_connectivity(g, k);
  const int n = g.node_count();

  // The plain Cut-LP first: its optimum is tau, and its rows seed the relaxed LP.
  SolverState plain = SolverState::initial(g, k, RelaxMode::None);
  WorkingLp lp = WorkingLp::for_state(plain);
  lp.seed_degree_rows(plain);
  IterativeRun run;
  run.tau = separated_extreme_point(lp, plain, options).objective;

  SolverState state = SolverState::initial(g, k, mode);
  lp = refresh_rows(std::move(lp), state);
  const Rational factor = mode == RelaxMode::HalfRelax ? Rational(3, 2) : Rational(1);

  while (!state.fractional.empty()) {
    if (state.iteration >= 2 * n) {
      throw TheoremViolation("more than 2n iterations with F nonempty", "{}");
    }
    IterationTrace trace;
    trace.iteration = state.iteration + 1;
    trace.fractional = state.fractional_copies();
    ExtremePoint x = separated_extreme_point(lp, state, options, &trace.separation_rounds);
    ++run.extreme_points;
    trace.rows = static_cast<std::int64_t>(lp.rows().size());
    trace.lp_value = x.objective;

    // Residual LP value plus what has been paid never exceeds the budget.
    if (g.cost_of(state.integral) + factor * x.objective > factor * run.tau) {
      throw TheoremViolation("cost certificate exceeded: cost(I) + LP > tau",
                             dump_point(state, x));
    }
    if (options.on_extreme_point) options.on_extreme_point(x, state);

    SolverState next = iterate_once(state, x, &trace);
    if (next.iteration == 1 && next.fractional_copies() > 2 * n - 1) {
      throw TheoremViolation("more than 2n-1 fractional copies after the first iteration",
                             dump_point(state, x));
    }
    trace.integral = 0;
    for (const auto& [id, count] : next.integral) trace.integral += count;
    run.trace.push_back(std::move(trace));
    state = std::move(next);
    lp = refresh_rows(std::move(lp), state);
  }
  run.integral = state.integral;
  return run;
}

void finish_report(RunReport& report, const MultiGraph& g, const IterativeRun& run) {
  report.edges = run.integral;
  report.cost = g.cost_of(run.integral);
  report.connectivity = edge_connectivity(g, run.integral);
  report.iterations = static_cast<int>(run.trace.size());
  report.trace = run.trace;
  report.tau_effective = run.tau;
  report.extreme_points = run.extreme_points;
  report.certified.cost_within_bound = report.cost <= report.cost_bound;
  report.certified.connectivity_within_bound = report.connectivity >= report.connectivity_bound;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Bicriteria: return "bicriteria";
    case Algorithm::ThreeHalves: return "three-halves";
    case Algorithm::Ecsm: return "ecsm";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "bicriteria") return Algorithm::Bicriteria;
  if (name == "three-halves") return Algorithm::ThreeHalves;
  if (name == "ecsm") return Algorithm::Ecsm;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

bool Certification::all() const {
  return cost_within_bound && connectivity_within_bound && direct_lp_certificate && lp_scaling &&
         oracle_lp_agrees.value_or(true) && oracle_optimum_bound.value_or(true);
}

Rational cut_lp_value(const MultiGraph& g, int k, const SolverOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return lp_optimum(g, k, options);
}

Rational ecsm_lp_value(const MultiGraph& g, int k, const SolverOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  // An optimal multi-subgraph LP point never needs more than k on one edge.
  return lp_optimum(g.with_multiplicities(k), k, options);
}

ExtremePoint separated_extreme_point(WorkingLp& lp, const SolverState& state,
                                     const SolverOptions& options, int* rounds) {
  for (int round = 1; round <= kSeparationRoundLimit; ++round) {
    ExtremePoint pt;
    try {
      pt = solve_extreme(lp);
    } catch (const LpInfeasible& e) {
      throw TheoremViolation(std::string("residual LP infeasible: ") + e.what(), "{}");
    }
    auto violated = find_violated_cuts(pt.weighting(), state, options.listing);
    if (violated.empty()) {
      if (rounds) *rounds = round;
      if (options.verify_vertices && !verify_vertex(lp, pt)) {
        throw TheoremViolation("LP solution is not a vertex", dump_point(state, pt));
      }
      return pt;
    }
    int added = 0;
    for (const ViolatedCut& vc : violated) added += lp.add_row(vc.cut, vc.demand) ? 1 : 0;
    if (added == 0) {
      throw TheoremViolation("separation returned only rows already in the LP",
                             dump_point(state, pt));
    }
  }
  throw std::logic_error("cutting-plane loop did not converge");
}

SolverState iterate_once(const SolverState& state, const ExtremePoint& x,
                         IterationTrace* trace) {
  const Rational threshold = rounding_threshold(state.mode);

  // With copies filled in order, each edge has at most one fractional copy,
  // so progress is impossible only if every edge is a single copy strictly
  // between 0 and the rounding threshold.
  bool progress_possible = false;
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    const std::int64_t copies = state.fractional.at(x.edges[i]);
    const Rational& y = x.values[i];
    if (copies >= 2 || y == 0 || y >= threshold) {
      progress_possible = true;
      break;
    }
  }
  if (!progress_possible && !x.edges.empty()) {
    throw TheoremViolation(state.mode == RelaxMode::HalfRelax
                               ? "extreme point has no edge with x_e = 0 or x_e >= 2/3"
                               : "extreme point has no edge with x_e in {0, 1}",
                           dump_point(state, x));
  }

  SolverState next = state;
  std::int64_t fixes = 0;
  std::int64_t removals = 0;
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    const EdgeId id = x.edges[i];
    const std::int64_t copies = state.fractional.at(id);
    const Rational& y = x.values[i];
    if (y < 0 || y > copies) throw std::invalid_argument("extreme point outside its bounds");
    std::int64_t ones = floor_of(y).get_si();
    Rational frac = y - ones;
    if (frac > 0 && frac >= threshold) {
      ++ones;
      frac = 0;
    }
    const std::int64_t keep = frac > 0 ? 1 : 0;
    const std::int64_t zeros = copies - ones - keep;
    if (ones > 0) next.integral[id] += ones;
    if (zeros > 0) next.removed[id] += zeros;
    if (keep > 0) {
      next.fractional[id] = keep;
    } else {
      next.fractional.erase(id);
    }
    fixes += ones;
    removals += zeros;
  }
  if (fixes + removals == 0 && !x.edges.empty()) {
    throw TheoremViolation("no edge left F", dump_point(state, x));
  }
  next.iteration = state.iteration + 1;
  next.check_partition();
  if (trace) {
    trace->integral_fixes = fixes;
    trace->zero_removals = removals;
  }
  return next;
}

RunReport solve_even(const MultiGraph& g, int k, const SolverOptions& options) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("solve_even needs an even k >= 2");
  IterativeRun run = run_iterative(g, k, RelaxMode::EvenRelax, options);
  RunReport report;
  report.algorithm = Algorithm::Bicriteria;
  report.k = k;
  report.k_effective = k;
  report.mode = RelaxMode::EvenRelax;
  report.tau = run.tau;
  report.tau_unbounded = ecsm_lp_value(g, k, options);
  report.cost_factor = 1;
  report.cost_bound = run.tau;
  report.connectivity_bound = k - 2;
  finish_report(report, g, run);
  report.certified.direct_lp_certificate = report.cost <= run.tau;
  return report;
}

RunReport solve(const MultiGraph& g, int k, const SolverOptions& options) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (k % 2 == 0) return solve_even(g, k, options);

  const Rational tau_k = cut_lp_value(g, k, options);
  IterativeRun run = run_iterative(g, k - 1, RelaxMode::EvenRelax, options);
  RunReport report;
  report.algorithm = Algorithm::Bicriteria;
  report.k = k;
  report.k_effective = k - 1;
  report.mode = RelaxMode::EvenRelax;
  report.tau = tau_k;
  report.tau_unbounded = ecsm_lp_value(g, k, options);
  report.cost_factor = ratio(k - 1, k);
  report.cost_bound = report.cost_factor * tau_k;
  report.connectivity_bound = k - 3;
  finish_report(report, g, run);
  report.certified.direct_lp_certificate = report.cost <= run.tau;
  report.certified.lp_scaling = run.tau <= report.cost_bound;
  return report;
}

RunReport solve_three_halves(const MultiGraph& g, int k, const SolverOptions& options) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  IterativeRun run = run_iterative(g, k, RelaxMode::HalfRelax, options);
  RunReport report;
  report.algorithm = Algorithm::ThreeHalves;
  report.k = k;
  report.k_effective = k;
  report.mode = RelaxMode::HalfRelax;
  report.tau = run.tau;
  report.tau_unbounded = ecsm_lp_value(g, k, options);
  report.cost_factor = Rational(3, 2);
  report.cost_bound = report.cost_factor * run.tau;
  report.connectivity_bound = k - 1;
  finish_report(report, g, run);
  report.certified.direct_lp_certificate = report.cost <= report.cost_factor * run.tau;
  return report;
}

RunReport solve_ecsm(const MultiGraph& g, int k, const SolverOptions& options) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const int p = k % 2 == 0 ? 2 : 3;
  require_connectivity(g, 1);
  const MultiGraph boosted = g.scaled_multiplicities(k + p);
  IterativeRun run = run_iterative(boosted, k + p, RelaxMode::EvenRelax, options);

  RunReport report;
  report.algorithm = Algorithm::Ecsm;
  report.k = k;
  report.k_effective = k + p;
  report.mode = RelaxMode::EvenRelax;
  try {
    report.tau = cut_lp_value(g, k, options);
  } catch (const InstanceInfeasible&) {
    report.tau = std::nullopt;
  }
  report.tau_unbounded = ecsm_lp_value(g, k, options);
  report.cost_factor = 1 + ratio(p, k);
  report.cost_bound = report.cost_factor * report.tau_unbounded;
  report.connectivity_bound = k + p - 2;
  finish_report(report, g, run);
  report.certified.direct_lp_certificate = report.cost <= run.tau;
  report.certified.lp_scaling = run.tau <= report.cost_bound;
  return report;
}

RunReport run_algorithm(Algorithm algorithm, const MultiGraph& g, int k,
                        const SolverOptions& options) {
  switch (algorithm) {
    case Algorithm::Bicriteria: return solve(g, k, options);
    case Algorithm::ThreeHalves: return solve_three_halves(g, k, options);
    case Algorithm::Ecsm: return solve_ecsm(g, k, options);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace kconn
