#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "kconn/multigraph.hpp"

namespace kconn {

/// Which residual demand function the working LP uses.
enum class RelaxMode {
  None,       // plain residual k - d_I(S)
  EvenRelax,  // drop 2 once d_I(S) >= k-2 (intended for even k)
  HalfRelax,  // drop 1 once d_I(S) >= k-1
};

std::string_view to_string(RelaxMode mode);
/// Throws std::invalid_argument for unknown names.
RelaxMode parse_relax_mode(std::string_view name);

/// Amount subtracted from the demand of relaxed cuts (0, 2 or 1).
int relaxation_amount(RelaxMode mode);

/// Membership of a cut with d_I(S) = integral_degree in the relaxed family.
/// Throws std::invalid_argument for RelaxMode::None.
bool is_relaxed_cut(std::int64_t integral_degree, int k, RelaxMode mode);

/// Unclamped residual demand f(S) of a cut with d_I(S) = integral_degree.
std::int64_t residual_demand(std::int64_t integral_degree, int k, RelaxMode mode);

/// Partition of the instance's edge copies into chosen (I), undecided (F)
/// and discarded sets, plus the demand parameters.
struct SolverState {
  const MultiGraph* graph = nullptr;  // not owned; must outlive the state
  EdgeCounts integral;
  EdgeCounts fractional;  // copies still undecided; the LP upper bound per edge
  EdgeCounts removed;
  int k = 0;
  RelaxMode mode = RelaxMode::None;
  int iteration = 0;

  /// I = {}, F = every copy of every edge.
  static SolverState initial(const MultiGraph& g, int k, RelaxMode mode);

  std::int64_t integral_degree(const CutSet& s) const { return cut_count(*graph, integral, s); }
  std::int64_t demand(const CutSet& s) const {
    return residual_demand(integral_degree(s), k, mode);
  }
  std::int64_t fractional_copies() const;
  /// Throws std::logic_error if I, F, removed do not partition the copies.
  void check_partition() const;
};

struct LpVariable {
  EdgeId edge;
  int u = 0;
  int v = 0;
  Rational cost;
  std::int64_t upper = 1;
};

/// x(delta_F(S)) >= rhs. Only rows with rhs > 0 are stored.
struct CutRow {
  CutSet cut;
  std::int64_t rhs = 0;
};

class LinearProgram;

/// The LP over the fractional edges: one variable per edge of F with bounds
/// [0, copies in F], and the cut rows generated so far.
class WorkingLp {
 public:
  static WorkingLp for_state(const SolverState& state);

  const std::vector<LpVariable>& variables() const { return vars_; }
  const std::vector<CutRow>& rows() const { return rows_; }

  /// Adds x(delta_F(S)) >= rhs keyed by the canonical cut. Returns false if
  /// the cut already has a row or rhs <= 0.
  bool add_row(const CutSet& cut, std::int64_t rhs);
  bool has_row(const CutSet& cut) const;

  /// Rows with the singleton cut of every node whose demand is positive.
  void seed_degree_rows(const SolverState& state);

  /// Variable indices of the edges crossing `cut`.
  std::vector<int> row_support(const CutSet& cut) const;

  LinearProgram to_program() const;

  friend WorkingLp refresh_rows(WorkingLp lp, const SolverState& state);

 private:
  std::vector<LpVariable> vars_;  // sorted by edge id
  std::vector<CutRow> rows_;
};

/// Recomputes every stored rhs against the current state, drops rows whose
/// demand is no longer positive, and drops variables of edges no longer in F
/// (upper bounds follow F's copy counts).
WorkingLp refresh_rows(WorkingLp lp, const SolverState& state);

}  // namespace kconn
