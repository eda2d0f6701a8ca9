#include "kconn/cutlp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kconn/simplex.hpp"

namespace kconn {

std::string_view to_string(RelaxMode mode) {
  switch (mode) {
    case RelaxMode::None: return "none";
    case RelaxMode::EvenRelax: return "even-relax";
    case RelaxMode::HalfRelax: return "half-relax";
  }
  return "?";
}

RelaxMode parse_relax_mode(std::string_view name) {
  if (name == "none") return RelaxMode::None;
  if (name == "even-relax") return RelaxMode::EvenRelax;
  if (name == "half-relax") return RelaxMode::HalfRelax;
  throw std::invalid_argument("unknown relax mode '" + std::string(name) + "'");
}

int relaxation_amount(RelaxMode mode) {
  switch (mode) {
    case RelaxMode::None: return 0;
    case RelaxMode::EvenRelax: return 2;
    case RelaxMode::HalfRelax: return 1;
  }
  return 0;
}

bool is_relaxed_cut(std::int64_t integral_degree, int k, RelaxMode mode) {
  if (mode == RelaxMode::None) throw std::invalid_argument("relaxed family undefined without relaxation");
  return integral_degree >= k - relaxation_amount(mode);
}

std::int64_t residual_demand(std::int64_t integral_degree, int k, RelaxMode mode) {
  std::int64_t base = k - integral_degree;
  if (mode != RelaxMode::None && is_relaxed_cut(integral_degree, k, mode)) {
    return base - relaxation_amount(mode);
  }
  return base;
}

// SolverState

SolverState SolverState::initial(const MultiGraph& g, int k, RelaxMode mode) {
  SolverState s;
  s.graph = &g;
  s.fractional = g.all_copies();
  s.k = k;
  s.mode = mode;
  return s;
}

std::int64_t SolverState::fractional_copies() const {
  std::int64_t total = 0;
  for (const auto& [id, count] : fractional) total += count;
  return total;
}

void SolverState::check_partition() const {
  auto get = [](const EdgeCounts& m, EdgeId id) {
    auto it = m.find(id);
    return it == m.end() ? std::int64_t{0} : it->second;
  };
  for (const Edge& e : graph->edges()) {
    std::int64_t i = get(integral, e.id), f = get(fractional, e.id), r = get(removed, e.id);
    if (i < 0 || f < 0 || r < 0 || i + f + r != e.multiplicity) {
      throw std::logic_error("edge " + std::to_string(index_of(e.id)) +
                             " copies are not partitioned by I, F, removed");
    }
  }
  for (const EdgeCounts* m : {&integral, &fractional, &removed}) {
    for (const auto& [id, count] : *m) {
      if (!graph->contains(id)) throw std::logic_error("state references an unknown edge");
      if (count == 0) throw std::logic_error("state stores an empty entry");
    }
  }
}

// WorkingLp

WorkingLp WorkingLp::for_state(const SolverState& state) {
  WorkingLp lp;
  for (const auto& [id, copies] : state.fractional) {
    const Edge& e = state.graph->edge(id);
    lp.vars_.push_back(LpVariable{id, e.u, e.v, e.cost, copies});
  }
  return lp;
}

bool WorkingLp::has_row(const CutSet& cut) const {
  CutSet key = cut.canonical();
  return std::any_of(rows_.begin(), rows_.end(), [&](const CutRow& r) { return r.cut == key; });
}

bool WorkingLp::add_row(const CutSet& cut, std::int64_t rhs) {
  if (rhs <= 0 || has_row(cut)) return false;
  rows_.push_back(CutRow{cut.canonical(), rhs});
  return true;
}

void WorkingLp::seed_degree_rows(const SolverState& state) {
  const int n = state.graph->node_count();
  if (n < 2) return;
  for (int v = 0; v < n; ++v) {
    int member[] = {v};
    CutSet s = CutSet::from_members(n, member);
    add_row(s, state.demand(s));
  }
}

std::vector<int> WorkingLp::row_support(const CutSet& cut) const {
  std::vector<int> support;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    if (cut.contains(vars_[j].u) != cut.contains(vars_[j].v)) support.push_back(static_cast<int>(j));
  }
  return support;
}

LinearProgram WorkingLp::to_program() const {
  LinearProgram lp;
  lp.cost.reserve(vars_.size());
  for (const LpVariable& v : vars_) {
    lp.cost.push_back(v.cost);
    lp.upper.push_back(Rational(v.upper));
  }
  for (const CutRow& row : rows_) lp.rows.push_back({row_support(row.cut), Rational(row.rhs)});
  return lp;
}

WorkingLp refresh_rows(WorkingLp lp, const SolverState& state) {
  std::vector<LpVariable> vars;
  for (LpVariable& v : lp.vars_) {
    auto it = state.fractional.find(v.edge);
    if (it == state.fractional.end() || it->second <= 0) continue;
    v.upper = it->second;
    vars.push_back(std::move(v));
  }
  lp.vars_ = std::move(vars);

  std::vector<CutRow> rows;
  if (!lp.vars_.empty()) {
    for (CutRow& row : lp.rows_) {
      row.rhs = state.demand(row.cut);
      if (row.rhs > 0) rows.push_back(std::move(row));
    }
  }
  lp.rows_ = std::move(rows);
  return lp;
}

}  // namespace kconn
