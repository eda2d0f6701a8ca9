#include "kconn/simplex.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace kconn {
namespace {

constexpr long kPivotLimit = 10'000'000;

// Dictionary form: x_basic[i] = const + sum_j D[i][j] * x_nonbasic[j]; the
// constants are implicit because every variable's current value is tracked.
class Dictionary {
 public:
  explicit Dictionary(const LinearProgram& lp)
      : nv_(lp.num_vars()), m_(static_cast<int>(lp.rows.size())), lp_(lp) {
    const int total = nv_ + m_;
    value_.assign(total, Rational(0));
    at_upper_.assign(total, false);
    basic_.resize(m_);
    nonbasic_.resize(nv_);
    D_.assign(m_, std::vector<Rational>(nv_, Rational(0)));
    reduced_ = lp.cost;

    for (int j = 0; j < nv_; ++j) {
      nonbasic_[j] = j;
      value_[j] = lp.upper[j];
      at_upper_[j] = true;
    }
    for (int i = 0; i < m_; ++i) {
      basic_[i] = nv_ + i;
      Rational lhs = 0;
      for (int j : lp.rows[i].support) {
        D_[i][j] = 1;
        lhs += lp.upper[j];
      }
      value_[nv_ + i] = lhs - lp.rows[i].rhs;
      if (value_[nv_ + i] < 0) {
        throw LpInfeasible("row " + std::to_string(i) + " cannot be satisfied within bounds", i);
      }
    }
  }

  void optimize() {
    while (true) {
      auto entering = choose_entering();
      if (!entering) return;
      step(*entering);
      if (++pivots_ > kPivotLimit) throw std::logic_error("simplex pivot limit exceeded");
    }
  }

  LpSolution solution() const {
    LpSolution sol;
    sol.values.assign(value_.begin(), value_.begin() + nv_);
    sol.objective = 0;
    for (int j = 0; j < nv_; ++j) sol.objective += lp_.cost[j] * sol.values[j];
    sol.row_duals.assign(m_, Rational(0));
    sol.upper_duals.assign(nv_, Rational(0));
    std::vector<std::pair<int, int>> order;  // (variable, column)
    for (int c = 0; c < nv_; ++c) order.emplace_back(nonbasic_[c], c);
    std::sort(order.begin(), order.end());
    for (auto [var, col] : order) {
      if (var < nv_) {
        if (at_upper_[var]) {
          sol.basis.push_back({ActiveConstraint::Kind::Upper, var});
          sol.upper_duals[var] = -reduced_[col];
        } else {
          sol.basis.push_back({ActiveConstraint::Kind::Lower, var});
        }
      } else {
        sol.basis.push_back({ActiveConstraint::Kind::Row, var - nv_});
        sol.row_duals[var - nv_] = reduced_[col];
      }
    }
    sol.pivots = pivots_;
    return sol;
  }

 private:
  struct Entering {
    int column;
    int direction;  // +1 increase from lower, -1 decrease from upper
  };

  bool has_upper(int var) const { return var < nv_; }
  const Rational& upper(int var) const { return lp_.upper[var]; }

  std::optional<Entering> choose_entering() const {
    std::optional<Entering> best;
    int best_var = -1;
    for (int c = 0; c < nv_; ++c) {
      const int var = nonbasic_[c];
      if (best && var > best_var) continue;
      const Rational& r = reduced_[c];
      int dir = 0;
      if (!at_upper_[var] && r < 0 && (!has_upper(var) || upper(var) > 0)) dir = 1;
      if (at_upper_[var] && r > 0) dir = -1;
      if (dir != 0) {
        best = Entering{c, dir};
        best_var = var;
      }
    }
    return best;
  }

  void step(const Entering& in) {
    const int q = in.column;
    const int entering_var = nonbasic_[q];

    std::optional<Rational> limit;
    if (has_upper(entering_var)) limit = upper(entering_var);
    int leave_row = -1;
    bool leave_to_upper = false;

    for (int i = 0; i < m_; ++i) {
      if (D_[i][q] == 0) continue;
      const int var = basic_[i];
      Rational rate = D_[i][q] * in.direction;
      Rational bound;
      bool to_upper;
      if (rate < 0) {
        bound = value_[var] / (-rate);
        to_upper = false;
      } else if (has_upper(var)) {
        bound = (upper(var) - value_[var]) / rate;
        to_upper = true;
      } else {
        continue;
      }
      bool better;
      if (!limit) {
        better = true;
      } else if (bound < *limit) {
        better = true;
      } else if (bound == *limit && leave_row >= 0) {
        better = var < basic_[leave_row];
      } else {
        better = false;  // ties with the entering variable's own bound: flip
      }
      if (better) {
        limit = bound;
        leave_row = i;
        leave_to_upper = to_upper;
      }
    }
    if (!limit) throw std::logic_error("simplex: unbounded direction in a bounded program");

    const Rational t = *limit;
    if (t != 0) {
      const Rational delta = t * in.direction;
      value_[entering_var] += delta;
      for (int i = 0; i < m_; ++i) {
        if (D_[i][q] != 0) value_[basic_[i]] += D_[i][q] * delta;
      }
    }

    if (leave_row < 0) {
      at_upper_[entering_var] = !at_upper_[entering_var];
      return;
    }

    const int p = leave_row;
    const int leaving_var = basic_[p];
    // Snap exactly onto the bound that was hit.
    value_[leaving_var] = leave_to_upper ? upper(leaving_var) : Rational(0);
    at_upper_[leaving_var] = leave_to_upper;

    // Rewrite row p to express the entering variable.
    const Rational pivot = D_[p][q];
    std::vector<Rational>& row = D_[p];
    for (int j = 0; j < nv_; ++j) {
      if (j == q) {
        row[j] = 1 / pivot;
      } else if (row[j] != 0) {
        row[j] = -row[j] / pivot;
      }
    }
    for (int i = 0; i < m_; ++i) {
      if (i == p || D_[i][q] == 0) continue;
      const Rational factor = D_[i][q];
      for (int j = 0; j < nv_; ++j) {
        if (j == q) {
          D_[i][j] = factor * row[q];
        } else if (row[j] != 0) {
          D_[i][j] += factor * row[j];
        }
      }
    }
    if (reduced_[q] != 0) {
      const Rational factor = reduced_[q];
      for (int j = 0; j < nv_; ++j) {
        if (j == q) {
          reduced_[j] = factor * row[q];
        } else if (row[j] != 0) {
          reduced_[j] += factor * row[j];
        }
      }
    }
    basic_[p] = entering_var;
    nonbasic_[q] = leaving_var;
  }

  int nv_;
  int m_;
  const LinearProgram& lp_;
  std::vector<Rational> value_;
  std::vector<bool> at_upper_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<std::vector<Rational>> D_;
  std::vector<Rational> reduced_;
  long pivots_ = 0;
};

Rational row_lhs(const LinearProgram::Row& row, std::span<const Rational> values) {
  Rational lhs = 0;
  for (int j : row.support) lhs += values[j];
  return lhs;
}

std::vector<Rational> constraint_vector(const LinearProgram& lp, const ActiveConstraint& c) {
  std::vector<Rational> vec(lp.num_vars(), Rational(0));
  if (c.kind == ActiveConstraint::Kind::Row) {
    for (int j : lp.rows[c.index].support) vec[j] = 1;
  } else {
    vec[c.index] = 1;
  }
  return vec;
}

bool is_active(const LinearProgram& lp, std::span<const Rational> values,
               const ActiveConstraint& c) {
  switch (c.kind) {
    case ActiveConstraint::Kind::Row:
      return c.index >= 0 && c.index < static_cast<int>(lp.rows.size()) &&
             row_lhs(lp.rows[c.index], values) == lp.rows[c.index].rhs;
    case ActiveConstraint::Kind::Lower:
      return c.index >= 0 && c.index < lp.num_vars() && values[c.index] == 0;
    case ActiveConstraint::Kind::Upper:
      return c.index >= 0 && c.index < lp.num_vars() && values[c.index] == lp.upper[c.index];
  }
  return false;
}

}  // namespace

LpSolution solve_program(const LinearProgram& lp) {
  if (lp.upper.size() != lp.cost.size()) throw std::invalid_argument("cost/upper size mismatch");
  for (const auto& row : lp.rows) {
    for (int j : row.support) {
      if (j < 0 || j >= lp.num_vars()) throw std::invalid_argument("row support out of range");
    }
  }
  Dictionary dict(lp);
  dict.optimize();
  return dict.solution();
}

int exact_rank(std::vector<std::vector<Rational>> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(vectors.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < vectors.size() && vectors[pivot][c] == 0) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[pivot], vectors[rank]);
    for (std::size_t r = rank + 1; r < vectors.size(); ++r) {
      if (vectors[r][c] == 0) continue;
      Rational f = vectors[r][c] / vectors[rank][c];
      for (std::size_t k = c; k < cols; ++k) vectors[r][k] -= f * vectors[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool verify_vertex(const LinearProgram& lp, std::span<const Rational> values,
                   std::span<const ActiveConstraint> basis) {
  const int nv = lp.num_vars();
  if (static_cast<int>(values.size()) != nv) return false;
  for (int j = 0; j < nv; ++j) {
    if (values[j] < 0 || values[j] > lp.upper[j]) return false;
  }
  for (const auto& row : lp.rows) {
    if (row_lhs(row, values) < row.rhs) return false;
  }
  if (!basis.empty()) {
    if (static_cast<int>(basis.size()) != nv) return false;
    std::vector<std::vector<Rational>> claimed;
    for (const auto& c : basis) {
      if (!is_active(lp, values, c)) return false;
      claimed.push_back(constraint_vector(lp, c));
    }
    if (exact_rank(std::move(claimed)) != nv) return false;
  }
  std::vector<std::vector<Rational>> active;
  for (int i = 0; i < static_cast<int>(lp.rows.size()); ++i) {
    ActiveConstraint c{ActiveConstraint::Kind::Row, i};
    if (is_active(lp, values, c)) active.push_back(constraint_vector(lp, c));
  }
  for (int j = 0; j < nv; ++j) {
    if (values[j] == 0) active.push_back(constraint_vector(lp, {ActiveConstraint::Kind::Lower, j}));
    if (values[j] == lp.upper[j]) {
      active.push_back(constraint_vector(lp, {ActiveConstraint::Kind::Upper, j}));
    }
  }
  return exact_rank(std::move(active)) == nv;
}

EdgeWeighting ExtremePoint::weighting() const {
  EdgeWeighting w;
  for (std::size_t i = 0; i < edges.size(); ++i) w.emplace(edges[i], values[i]);
  return w;
}

const Rational& ExtremePoint::value(EdgeId id) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), id);
  if (it == edges.end() || *it != id) throw std::out_of_range("edge not in extreme point");
  return values[it - edges.begin()];
}

ExtremePoint solve_extreme(const WorkingLp& lp) {
  LinearProgram program = lp.to_program();
  LpSolution sol = solve_program(program);
  ExtremePoint pt;
  for (const LpVariable& v : lp.variables()) pt.edges.push_back(v.edge);
  pt.values = std::move(sol.values);
  pt.basis = std::move(sol.basis);
  pt.objective = std::move(sol.objective);
  pt.row_duals = std::move(sol.row_duals);
  pt.upper_duals = std::move(sol.upper_duals);
  return pt;
}

bool verify_vertex(const WorkingLp& lp, const ExtremePoint& pt) {
  return verify_vertex(lp.to_program(), pt.values, pt.basis);
}

}  // namespace kconn
