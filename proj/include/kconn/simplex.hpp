#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "kconn/cutlp.hpp"
#include "kconn/rational.hpp"

namespace kconn {

/// min cost.x  s.t.  sum_{j in row.support} x_j >= row.rhs,  0 <= x <= upper.
/// Rows are covering constraints (0/1 coefficients), so x = upper maximizes
/// every left-hand side; the solver starts there and needs no phase one.
struct LinearProgram {
  struct Row {
    std::vector<int> support;
    Rational rhs;
  };
  std::vector<Rational> cost;
  std::vector<Rational> upper;
  std::vector<Row> rows;

  int num_vars() const { return static_cast<int>(cost.size()); }
};

/// A constraint that holds with equality at a vertex.
struct ActiveConstraint {
  enum class Kind { Row, Lower, Upper };
  Kind kind;
  int index;  // row index for Kind::Row, variable index otherwise

  friend bool operator==(const ActiveConstraint&, const ActiveConstraint&) = default;
};

struct LpSolution {
  std::vector<Rational> values;
  /// num_vars() linearly independent active constraints (the nonbasic set).
  std::vector<ActiveConstraint> basis;
  Rational objective;
  /// Optimal dual multipliers: one per row (>= 0) and one per upper bound (>= 0).
  std::vector<Rational> row_duals;
  std::vector<Rational> upper_duals;
  long pivots = 0;
};

/// The program has no feasible point; `row` is a constraint that fails even
/// at x = upper.
class LpInfeasible : public std::runtime_error {
 public:
  LpInfeasible(const std::string& what, int row) : std::runtime_error(what), row_(row) {}
  int row() const { return row_; }

 private:
  int row_;
};

/// Bounded-variable primal simplex in exact arithmetic, Bland's rule (lowest
/// variable index enters and leaves). Returns an optimal basic solution.
LpSolution solve_program(const LinearProgram& lp);

/// Feasible, every claimed active constraint tight, and the constraints tight
/// at `values` have rank num_vars(). An empty `basis` skips the claimed-basis
/// checks.
bool verify_vertex(const LinearProgram& lp, std::span<const Rational> values,
                   std::span<const ActiveConstraint> basis);

/// Rank of a set of rational vectors (exact Gaussian elimination).
int exact_rank(std::vector<std::vector<Rational>> vectors);

/// An optimal vertex of a WorkingLp, keyed back to edge ids.
struct ExtremePoint {
  std::vector<EdgeId> edges;
  std::vector<Rational> values;  // aligned with edges
  std::vector<ActiveConstraint> basis;
  Rational objective;
  std::vector<Rational> row_duals;
  std::vector<Rational> upper_duals;

  EdgeWeighting weighting() const;
  const Rational& value(EdgeId id) const;
};

/// Throws LpInfeasible when the rows cannot be met within the bounds.
ExtremePoint solve_extreme(const WorkingLp& lp);
bool verify_vertex(const WorkingLp& lp, const ExtremePoint& pt);

}  // namespace kconn
