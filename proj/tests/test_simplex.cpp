#include <doctest.h>

#include <random>

#include "kconn/simplex.hpp"
#include "support.hpp"

using namespace kconn;
using namespace kconn::testing;

namespace {

// Every cut row of the Cut-LP at k over the edges of g, upper bound 1.
LinearProgram full_program(const MultiGraph& g, int k) {
  LinearProgram lp;
  for (const Edge& e : g.edges()) {
    lp.cost.push_back(e.cost);
    lp.upper.push_back(e.multiplicity);
  }
  const int n = g.node_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    LinearProgram::Row row;
    int j = 0;
    for (const Edge& e : g.edges()) {
      if (in_mask(mask, e.u) != in_mask(mask, e.v)) row.support.push_back(j);
      ++j;
    }
    row.rhs = k;
    lp.rows.push_back(row);
  }
  return lp;
}

// Dual feasibility plus equal objectives: an optimality proof that does not
// trust the pivoting.
bool certifies_optimum(const LinearProgram& lp, const LpSolution& sol) {
  const int nv = lp.num_vars();
  Rational primal = 0, dual = 0;
  for (int j = 0; j < nv; ++j) {
    if (sol.values[j] < 0 || sol.values[j] > lp.upper[j]) return false;
    primal += lp.cost[j] * sol.values[j];
  }
  std::vector<Rational> load(nv, Rational(0));
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    const Rational& y = sol.row_duals[r];
    if (y < 0) return false;
    Rational lhs = 0;
    for (int j : lp.rows[r].support) {
      lhs += sol.values[j];
      load[j] += y;
    }
    if (lhs < lp.rows[r].rhs) return false;
    dual += y * lp.rows[r].rhs;
  }
  for (int j = 0; j < nv; ++j) {
    if (sol.upper_duals[j] < 0) return false;
    if (load[j] - sol.upper_duals[j] > lp.cost[j]) return false;
    dual -= sol.upper_duals[j] * lp.upper[j];
  }
  return primal == dual && primal == sol.objective;
}

}  // namespace

TEST_CASE("single variable without rows sits at zero") {
  LinearProgram lp;
  lp.cost = {1};
  lp.upper = {1};
  LpSolution sol = solve_program(lp);
  CHECK(sol.values[0] == 0);
  CHECK(sol.objective == 0);
  CHECK(verify_vertex(lp, sol.values, sol.basis));
}

TEST_CASE("degree row on a 4-cycle forces both incident edges") {
  MultiGraph c4 = cycle_graph(4);
  SolverState st = SolverState::initial(c4, 2, RelaxMode::None);
  WorkingLp lp = WorkingLp::for_state(st);
  lp.add_row(CutSet::from_mask(4, 0b0001), 2);
  ExtremePoint x = solve_extreme(lp);
  CHECK(x.value(EdgeId{0}) == 1);
  CHECK(x.value(EdgeId{3}) == 1);
  CHECK(x.value(EdgeId{1}) == 0);
  CHECK(x.value(EdgeId{2}) == 0);
  CHECK(x.objective == 2);
  CHECK(verify_vertex(lp, x));
}

TEST_CASE("K4 full Cut-LP at k = 2 has value 4") {
  MultiGraph k4 = complete_graph(4);
  LinearProgram lp = full_program(k4, 2);
  CHECK(lp.rows.size() == 7);
  LpSolution sol = solve_program(lp);
  CHECK(sol.objective == 4);
  CHECK(certifies_optimum(lp, sol));
  CHECK(verify_vertex(lp, sol.values, sol.basis));
}

TEST_CASE("non-vertices and infeasible points are rejected") {
  MultiGraph k4 = complete_graph(4);  // edges 01 02 03 12 13 23
  LinearProgram lp = full_program(k4, 2);
  // Hamiltonian cycles 0-1-2-3 and 0-2-1-3 are both optimal vertices.
  std::vector<Rational> h1 = {1, 0, 1, 1, 0, 1};
  std::vector<Rational> h2 = {0, 1, 1, 1, 1, 0};
  CHECK(verify_vertex(lp, h1, {}));
  CHECK(verify_vertex(lp, h2, {}));
  std::vector<Rational> mid(6);
  for (int j = 0; j < 6; ++j) mid[j] = (h1[j] + h2[j]) / 2;
  CHECK_FALSE(verify_vertex(lp, mid, {}));

  LpSolution sol = solve_program(lp);
  std::vector<Rational> nudged = sol.values;
  for (auto& v : nudged) {
    if (v > 0) {
      v -= Rational(1, 1000000);
      break;
    }
  }
  CHECK_FALSE(verify_vertex(lp, nudged, {}));

  // A claimed basis that is not tight is rejected even when the point is a vertex.
  std::vector<ActiveConstraint> wrong = sol.basis;
  for (auto& a : wrong) {
    if (a.kind == ActiveConstraint::Kind::Lower && sol.values[a.index] == 0) {
      a.kind = ActiveConstraint::Kind::Upper;
      break;
    }
  }
  if (wrong != sol.basis) CHECK_FALSE(verify_vertex(lp, sol.values, wrong));
}

TEST_CASE("infeasible rows are reported") {
  LinearProgram lp;
  lp.cost = {1, 1};
  lp.upper = {1, 1};
  lp.rows.push_back({{0, 1}, Rational(3)});
  CHECK_THROWS_AS(solve_program(lp), LpInfeasible);
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{Rational(1, 3), 1, 0}, {1, 3, 0}, {0, 0, 1}}) == 2);
}

TEST_CASE("property: random working LPs yield certified vertices") {
  std::mt19937_64 rng(1234);
  int solved = 0;
  for (int trial = 0; trial < 160; ++trial) {
    const int n = 3 + trial % 6;
    MultiGraph g = random_graph(n, n + trial % 5, rng, 1 + trial % 3);
    const int k = 2 + trial % 4;
    SolverState st = SolverState::initial(g, k, RelaxMode::None);
    WorkingLp lp = WorkingLp::for_state(st);
    std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << (n - 1)) - 1);
    std::uniform_int_distribution<int> rhs(1, k);
    for (int r = 0; r < 3 * n; ++r) {
      CutSet c = CutSet::from_mask(n, mask(rng));
      // Keep rows satisfiable at x = upper.
      std::int64_t reach = cut_count(g, g.all_copies(), c);
      lp.add_row(c, std::min<std::int64_t>(rhs(rng), reach));
    }
    ExtremePoint x = solve_extreme(lp);
    CHECK(verify_vertex(lp, x));
    LinearProgram prog = lp.to_program();
    LpSolution sol = solve_program(prog);
    CHECK(certifies_optimum(prog, sol));
    CHECK(sol.values == x.values);  // deterministic
    Rational dot = 0;
    for (std::size_t j = 0; j < x.edges.size(); ++j) dot += g.edge(x.edges[j]).cost * x.values[j];
    CHECK(dot == x.objective);
    ++solved;
  }
  CHECK(solved >= 100);
}

TEST_CASE("property: optimum of the full Cut-LP is a vertex of it") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + trial % 4;
    MultiGraph g = random_graph(n, 2 * n, rng);
    const int k = 2;
    LinearProgram lp = full_program(g, k);
    LpSolution sol;
    try {
      sol = solve_program(lp);
    } catch (const LpInfeasible&) {
      continue;
    }
    CHECK(certifies_optimum(lp, sol));
    CHECK(verify_vertex(lp, sol.values, sol.basis));
  }
}
