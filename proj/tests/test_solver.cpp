#include <doctest.h>

#include <random>

#include "kconn/errors.hpp"
#include "kconn/solver.hpp"
#include "kconn/verify.hpp"
#include "support.hpp"

using namespace kconn;
using namespace kconn::testing;

namespace {

// A k-edge-connected random graph: K_n plus random extras, so every cut has
// at least n-1 edges.
MultiGraph dense_graph(int n, std::mt19937_64& rng) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, random_cost(rng));
  std::uniform_int_distribution<int> node(0, n - 1);
  for (int i = 0; i < n; ++i) {
    int u = node(rng), v = node(rng);
    if (u != v) g.add_edge(u, v, random_cost(rng));
  }
  return g;
}

ExtremePoint point(std::vector<std::pair<EdgeId, Rational>> entries) {
  ExtremePoint x;
  for (auto& [id, v] : entries) {
    x.edges.push_back(id);
    x.values.push_back(v);
  }
  return x;
}

}  // namespace

TEST_CASE("algorithm names") {
  for (Algorithm a : {Algorithm::Bicriteria, Algorithm::ThreeHalves, Algorithm::Ecsm})
    CHECK(parse_algorithm(to_string(a)) == a);
  CHECK_THROWS(parse_algorithm("greedy"));
}

TEST_CASE("K5 at k = 4 keeps every edge") {
  MultiGraph k5 = complete_graph(5);
  RunReport r = solve_even(k5, 4);
  CHECK(r.tau == 10);
  CHECK(r.cost == 10);
  CHECK(r.connectivity == 4);
  CHECK(r.edges == k5.all_copies());
  CHECK(r.certified.all());
  CHECK(full_cut_lp(k5, 4, true).value == 10);
}

TEST_CASE("k = 2 bicriteria still meets the cost bound") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    MultiGraph g = random_graph(6, 5, rng);
    RunReport r = solve_even(g, 2);
    CHECK(r.cost <= *r.tau);
    CHECK(r.connectivity >= 0);
    CHECK(r.certified.all());
    RunReport same = solve(g, 2);
    CHECK(same == r);
  }
  CHECK_THROWS_AS(solve_even(complete_graph(4), 3), std::invalid_argument);
}

TEST_CASE("odd k runs one lower") {
  std::mt19937_64 rng(2);
  for (int k : {5, 7}) {
    for (int trial = 0; trial < 4; ++trial) {
      MultiGraph g = dense_graph(8, rng);
      RunReport r = solve(g, k);
      const Rational tau_k = full_cut_lp(g, k, true).value;
      const Rational tau_k1 = full_cut_lp(g, k - 1, true).value;
      CHECK(r.k_effective == k - 1);
      CHECK(*r.tau == tau_k);
      CHECK(r.tau_effective == tau_k1);
      CHECK(r.cost <= tau_k1);
      CHECK(tau_k1 <= ratio(k - 1, k) * tau_k);
      CHECK(r.cost <= ratio(k - 1, k) * tau_k);
      CHECK(r.connectivity >= k - 3);
      CHECK(r.cost_factor == ratio(k - 1, k));
      CHECK(r.certified.all());
    }
  }
}

TEST_CASE("three-halves examples") {
  MultiGraph k5 = complete_graph(5);
  RunReport r = solve_three_halves(k5, 4);
  CHECK(r.cost_bound == 15);
  CHECK(r.cost == 10);
  CHECK(r.connectivity >= 3);
  CHECK(r.mode == RelaxMode::HalfRelax);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    MultiGraph g = dense_graph(5 + trial % 4, rng);
    RunReport h = solve_three_halves(g, 3);
    CHECK(h.connectivity >= 2);
    CHECK(h.cost <= Rational(3, 2) * full_cut_lp(g, 3, true).value);
    CHECK(h.certified.all());
  }
}

TEST_CASE("rounding threshold 2/3 is inclusive under the half relaxation") {
  MultiGraph c3 = cycle_graph(3);
  SolverState st = SolverState::initial(c3, 2, RelaxMode::HalfRelax);
  ExtremePoint x = point({{EdgeId{0}, Rational(2, 3)},
                          {EdgeId{1}, Rational(1, 2)},
                          {EdgeId{2}, Rational(1, 2)}});
  SolverState next = iterate_once(st, x);
  CHECK(next.integral.count(EdgeId{0}) == 1);
  CHECK(next.fractional.size() == 2);

  // Just below the threshold there is nothing to round.
  x.values[0] = Rational(2, 3) - Rational(1, 1000);
  CHECK_THROWS_AS(iterate_once(st, x), TheoremViolation);

  // The even relaxation only fixes copies at exactly 1.
  SolverState even = SolverState::initial(c3, 2, RelaxMode::EvenRelax);
  x.values[0] = Rational(2, 3);
  CHECK_THROWS_AS(iterate_once(even, x), TheoremViolation);
}

TEST_CASE("iterate_once examples") {
  MultiGraph c4 = cycle_graph(4);
  SolverState st = SolverState::initial(c4, 2, RelaxMode::EvenRelax);
  ExtremePoint ones = point({{EdgeId{0}, 1}, {EdgeId{1}, 1}, {EdgeId{2}, 1}, {EdgeId{3}, 1}});
  IterationTrace trace;
  SolverState done = iterate_once(st, ones, &trace);
  CHECK(done.fractional.empty());
  CHECK(done.integral.size() == 4);
  CHECK(trace.integral_fixes == 4);
  CHECK(done.iteration == 1);

  ExtremePoint one_zero = point({{EdgeId{0}, 0},
                                 {EdgeId{1}, Rational(1, 2)},
                                 {EdgeId{2}, Rational(1, 2)},
                                 {EdgeId{3}, Rational(1, 2)}});
  SolverState less = iterate_once(st, one_zero, &trace);
  CHECK(less.fractional.size() == 3);
  CHECK(less.removed.count(EdgeId{0}) == 1);
  CHECK(trace.zero_removals == 1);

  // Bundled copies fill in order: 5/2 of 4 copies is two at 1, one at 1/2, one at 0.
  MultiGraph g(2);
  EdgeId e = g.add_edge(0, 1, 1, 4);
  SolverState b = SolverState::initial(g, 2, RelaxMode::EvenRelax);
  SolverState nb = iterate_once(b, point({{e, Rational(5, 2)}}));
  CHECK(nb.integral.at(e) == 2);
  CHECK(nb.fractional.at(e) == 1);
  CHECK(nb.removed.at(e) == 1);
}

TEST_CASE("k-ECSM examples") {
  MultiGraph single(2);
  single.add_edge(0, 1, 1);
  RunReport r4 = solve_ecsm(single, 4);
  CHECK(r4.tau_unbounded == 4);
  CHECK(r4.cost <= 6);
  CHECK(r4.connectivity >= 4);
  CHECK(r4.certified.all());

  RunReport r3 = solve_ecsm(single, 3);
  CHECK(r3.cost <= 6);
  CHECK(r3.connectivity >= 4);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 4; ++trial) {
    MultiGraph g = random_graph(5, 3, rng);
    RunReport even = solve_ecsm(g, 4);
    CHECK(even.k_effective == 6);
    CHECK(even.connectivity >= 4);
    CHECK(even.cost <= Rational(3, 2) * full_cut_lp(g, 4, false).value);
    RunReport odd = solve_ecsm(g, 5);
    CHECK(odd.k_effective == 8);
    CHECK(odd.connectivity >= 6);
    CHECK(odd.cost <= Rational(8, 5) * full_cut_lp(g, 5, false).value);
    CHECK(odd.certified.all());
  }
}

TEST_CASE("infeasible instances are reported with a witness cut") {
  MultiGraph p = path_graph(4);
  try {
    solve(p, 2);
    FAIL("expected InstanceInfeasible");
  } catch (const InstanceInfeasible& e) {
    CHECK(e.witness().find("S = {") == 0);
  }
  CHECK_THROWS_AS(cut_lp_value(p, 2), InstanceInfeasible);
  MultiGraph split(4);
  split.add_edge(0, 1, 1);
  split.add_edge(2, 3, 1);
  CHECK_THROWS_AS(solve_ecsm(split, 2), InstanceInfeasible);
}

TEST_CASE("property: run invariants on random instances") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 24; ++trial) {
    const int n = 5 + trial % 4;
    MultiGraph g = dense_graph(n, rng);
    const int k = 2 + trial % (n - 2);  // K_n keeps every cut at n-1 or more
    Algorithm algo = std::array{Algorithm::Bicriteria, Algorithm::ThreeHalves}[trial % 2];
    std::int64_t points = 0;
    SolverOptions opts;
    opts.on_extreme_point = [&](const ExtremePoint&, const SolverState&) { ++points; };
    RunReport r = run_algorithm(algo, g, k, opts);
    CHECK(r.iterations <= 2 * n);
    CHECK(points == r.extreme_points);
    std::int64_t prev_total = INT64_MAX;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      const auto& t = r.trace[i];
      if (i > 0) CHECK(t.fractional <= 2 * n - 1);
      std::int64_t total = t.fractional + (i == 0 ? 0 : r.trace[i - 1].integral);
      CHECK(total <= prev_total);
      prev_total = total;
      CHECK(t.integral_fixes + t.zero_removals > 0);
    }
    CHECK(r.certified.all());
    CHECK(run_algorithm(algo, g, k, {}) == r);  // deterministic
  }
}

TEST_CASE("lp values") {
  MultiGraph k4 = complete_graph(4);
  CHECK(cut_lp_value(k4, 2) == 4);
  CHECK(cut_lp_value(k4, 3) == 6);
  MultiGraph single(2);
  single.add_edge(0, 1, 1);
  CHECK(ecsm_lp_value(single, 4) == 4);
}
