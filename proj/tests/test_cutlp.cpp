#include <doctest.h>

#include <random>

#include "kconn/cutlp.hpp"
#include "kconn/simplex.hpp"
#include "support.hpp"

using namespace kconn;
using namespace kconn::testing;

TEST_CASE("membership in the relaxed family") {
  for (int k = 3; k <= 8; ++k) {
    CHECK(is_relaxed_cut(k - 2, k, RelaxMode::EvenRelax));
    CHECK_FALSE(is_relaxed_cut(k - 2, k, RelaxMode::HalfRelax));
    CHECK(is_relaxed_cut(k - 1, k, RelaxMode::HalfRelax));
    CHECK_FALSE(is_relaxed_cut(0, k, RelaxMode::EvenRelax));
    CHECK_FALSE(is_relaxed_cut(0, k, RelaxMode::HalfRelax));
  }
  CHECK_THROWS(is_relaxed_cut(0, 4, RelaxMode::None));
}

TEST_CASE("residual demand examples") {
  CHECK(residual_demand(4, 6, RelaxMode::EvenRelax) == 0);
  CHECK(residual_demand(3, 6, RelaxMode::EvenRelax) == 3);
  CHECK(residual_demand(4, 5, RelaxMode::HalfRelax) == 0);
  CHECK(residual_demand(2, 5, RelaxMode::None) == 3);
  CHECK(relaxation_amount(RelaxMode::None) == 0);
  CHECK(relaxation_amount(RelaxMode::EvenRelax) == 2);
  CHECK(relaxation_amount(RelaxMode::HalfRelax) == 1);
}

TEST_CASE("relax mode names") {
  for (RelaxMode m : {RelaxMode::None, RelaxMode::EvenRelax, RelaxMode::HalfRelax})
    CHECK(parse_relax_mode(to_string(m)) == m);
  CHECK_THROWS(parse_relax_mode("quarter"));
}

TEST_CASE("property: demand structure") {
  for (int k = 2; k <= 9; ++k) {
    for (RelaxMode m : {RelaxMode::None, RelaxMode::EvenRelax, RelaxMode::HalfRelax}) {
      std::int64_t prev = residual_demand(0, k, m);
      for (std::int64_t d = 0; d <= k + 3; ++d) {
        std::int64_t f = residual_demand(d, k, m);
        CHECK(std::max<std::int64_t>(0, f) == reference_demand(d, k, m));
        CHECK(f <= prev);  // never increases as I grows
        prev = f;
        if (m == RelaxMode::EvenRelax) {
          CHECK((f == k - d || f == k - d - 2));
          if (f >= 1) CHECK_FALSE(is_relaxed_cut(d, k, m));
        }
        if (m == RelaxMode::HalfRelax && f >= 1) CHECK_FALSE(is_relaxed_cut(d, k, m));
      }
    }
  }
}

TEST_CASE("property: demand is cut-symmetric") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    MultiGraph g = random_graph(7, 10, rng, 2);
    SolverState st = SolverState::initial(g, 4 + trial % 3, RelaxMode::EvenRelax);
    std::bernoulli_distribution fix(0.4);
    for (const Edge& e : g.edges()) {
      if (fix(rng)) {
        st.integral[e.id] = e.multiplicity;
        st.fractional.erase(e.id);
      }
    }
    st.check_partition();
    for (std::uint64_t mask = 1; mask < 127; ++mask) {
      CutSet s = CutSet::from_mask(7, mask);
      CHECK(st.demand(s) == st.demand(s.complement()));
    }
  }
}

TEST_CASE("initial state and partition check") {
  MultiGraph g(3);
  g.add_edge(0, 1, 1, 2);
  g.add_edge(1, 2, 1);
  SolverState st = SolverState::initial(g, 2, RelaxMode::None);
  CHECK(st.fractional_copies() == 3);
  CHECK(st.integral.empty());
  st.check_partition();
  st.integral[EdgeId{0}] = 1;  // copy counted twice
  CHECK_THROWS_AS(st.check_partition(), std::logic_error);
}

TEST_CASE("working LP rows") {
  MultiGraph c4 = cycle_graph(4);
  SolverState st = SolverState::initial(c4, 2, RelaxMode::None);
  WorkingLp lp = WorkingLp::for_state(st);
  CHECK(lp.variables().size() == 4);
  CutSet s = CutSet::from_mask(4, 0b0001);
  CHECK(lp.add_row(s, 2));
  CHECK_FALSE(lp.add_row(s.complement(), 2));  // same cut, keyed canonically
  CHECK(lp.has_row(s.complement()));
  CHECK_FALSE(lp.add_row(CutSet::from_mask(4, 0b0010), 0));
  CHECK(lp.row_support(s) == std::vector<int>{0, 3});
  lp.seed_degree_rows(st);
  CHECK(lp.rows().size() == 4);
  LinearProgram prog = lp.to_program();
  CHECK(prog.num_vars() == 4);
  CHECK(prog.rows.size() == 4);
}

TEST_CASE("refresh drops satisfied rows") {
  MultiGraph c4 = cycle_graph(4);  // node 0 touches edges 0 (01) and 3 (30)
  SolverState st = SolverState::initial(c4, 2, RelaxMode::None);
  WorkingLp lp = WorkingLp::for_state(st);
  CutSet s = CutSet::from_mask(4, 0b0001);
  lp.add_row(s, 2);
  lp.add_row(CutSet::from_mask(4, 0b0100), 2);
  for (EdgeId e : {EdgeId{0}, EdgeId{3}}) {
    st.integral[e] = 1;
    st.fractional.erase(e);
  }
  WorkingLp after = refresh_rows(lp, st);
  CHECK_FALSE(after.has_row(s));
  CHECK(after.has_row(CutSet::from_mask(4, 0b0100)));
  CHECK(after.variables().size() == 2);

  SolverState empty = st;
  for (const auto& [id, c] : st.fractional) empty.integral[id] = c;
  empty.fractional.clear();
  CHECK(refresh_rows(lp, empty).rows().empty());
}

TEST_CASE("property: refreshed rhs equals demand recomputed from scratch") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 8;
    MultiGraph g = random_graph(n, 12, rng, 2);
    const int k = 4 + 2 * (trial % 2);
    RelaxMode mode = trial % 3 == 0 ? RelaxMode::HalfRelax : RelaxMode::EvenRelax;
    SolverState st = SolverState::initial(g, k, mode);
    WorkingLp lp = WorkingLp::for_state(st);
    std::uniform_int_distribution<std::uint64_t> mask_dist(1, (std::uint64_t{1} << (n - 1)) - 1);
    for (int r = 0; r < 40; ++r) {
      CutSet c = CutSet::from_mask(n, mask_dist(rng));
      lp.add_row(c, st.demand(c));
    }
    // Move random copies to I or discard them.
    std::uniform_int_distribution<int> action(0, 2);
    for (const Edge& e : g.edges()) {
      std::int64_t copies = e.multiplicity;
      std::int64_t to_i = 0, to_removed = 0;
      for (std::int64_t c = 0; c < copies; ++c) {
        int a = action(rng);
        if (a == 1) ++to_i;
        if (a == 2) ++to_removed;
      }
      if (to_i) st.integral[e.id] = to_i;
      if (to_removed) st.removed[e.id] = to_removed;
      if (copies - to_i - to_removed > 0) {
        st.fractional[e.id] = copies - to_i - to_removed;
      } else {
        st.fractional.erase(e.id);
      }
    }
    st.check_partition();
    WorkingLp after = refresh_rows(lp, st);
    for (const CutRow& row : after.rows()) {
      auto m = row.cut.mask();
      REQUIRE(m.has_value());
      CHECK(row.rhs == reference_demand(brute_crossing(g, st.integral, *m), k, mode));
      CHECK(row.rhs > 0);
    }
    for (const CutRow& row : lp.rows()) {
      std::int64_t d = reference_demand(brute_crossing(g, st.integral, *row.cut.mask()), k, mode);
      CHECK(after.has_row(row.cut) == (d > 0 && !st.fractional.empty()));
    }
    REQUIRE(after.variables().size() == st.fractional.size());
    for (const LpVariable& v : after.variables()) CHECK(v.upper == st.fractional.at(v.edge));
  }
}
