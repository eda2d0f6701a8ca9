#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kconn/multigraph.hpp"

namespace kconn {

enum class OracleMethod { FullLp, SubsetEnum, MinCut };

std::string_view to_string(OracleMethod method);

struct OracleResult {
  Rational value;
  OracleMethod method = OracleMethod::FullLp;
  std::optional<EdgeCounts> subgraph;       // SubsetEnum witness
  std::optional<EdgeWeighting> lp_point;    // FullLp primal witness (x_e totals per edge)
  std::vector<std::pair<CutSet, Rational>> cut_duals;  // FullLp dual witness, nonzero entries
  EdgeWeighting upper_duals;
};

/// Size caps of the brute-force oracles.
inline constexpr int kFullLpMaxNodes = 16;
inline constexpr std::int64_t kSubsetMaxCopies = 24;
inline constexpr int kMultiMaxNodes = 6;
inline constexpr std::size_t kMultiMaxEdges = 16;

/// Cut-LP with every one of the 2^(n-1)-1 cut rows written out. bounded adds
/// x_e <= multiplicity_e; unbounded is the multi-subgraph LP. Returns primal and
/// dual witnesses. Throws OracleDomainExceeded for n > 16 and
/// InstanceInfeasible when no fractional solution exists.
OracleResult full_cut_lp(const MultiGraph& g, int k, bool bounded);

/// Re-checks both witnesses of a full_cut_lp result with independent
/// arithmetic: primal feasibility on every cut, dual feasibility, and equal
/// objectives (which proves optimality).
bool check_lp_witness(const MultiGraph& g, int k, bool bounded, const OracleResult& result);

/// Minimum-cost k-edge-connected spanning subgraph (multi = false, copies
/// limited by multiplicity, at most 24 copies in total) or multi-subgraph
/// (multi = true, unlimited copies, n <= 6 and at most 16 edges), by
/// branch and bound over edges in decreasing cost order.
OracleResult exact_optimum(const MultiGraph& g, int k, bool multi);

struct ConnectivityCertificate {
  bool ok = false;
  std::int64_t connectivity = 0;
  std::optional<CutSet> witness;  // a cut with fewer than k crossing copies when !ok
};

ConnectivityCertificate certify_connectivity(const MultiGraph& g, const EdgeCounts& part, int k);

}  // namespace kconn
