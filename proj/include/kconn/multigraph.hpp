#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kconn/rational.hpp"

namespace kconn {

/// Stable edge identity. Survives removal of other edges.
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t index_of(EdgeId id) { return static_cast<std::uint32_t>(id); }

struct Edge {
  EdgeId id;
  int u = 0;
  int v = 0;
  Rational cost;
  std::int64_t multiplicity = 1;

  bool crosses(const std::vector<bool>& side) const { return side[u] != side[v]; }
};

/// Edge-id set with per-edge copy counts (a multiset of parallel copies).
using EdgeCounts = std::map<EdgeId, std::int64_t>;

/// Edge-id -> nonnegative weight.
using EdgeWeighting = std::map<EdgeId, Rational>;

/// Undirected multigraph over dense node indices [0, n). Parallel edges may
/// appear as separate entries or as one entry with multiplicity > 1.
class MultiGraph {
 public:
  explicit MultiGraph(int node_count);

  /// Appends an edge with the next free id. Rejects self-loops, out-of-range
  /// endpoints, negative costs, and multiplicity < 1.
  EdgeId add_edge(int u, int v, Rational cost, std::int64_t multiplicity = 1);
  void remove_edge(EdgeId id);

  int node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  bool contains(EdgeId id) const;
  /// Throws std::out_of_range for unknown ids.
  const Edge& edge(EdgeId id) const;

  /// Copy with every multiplicity multiplied by `factor`.
  MultiGraph scaled_multiplicities(std::int64_t factor) const;
  /// Copy with every multiplicity replaced by `multiplicity`.
  MultiGraph with_multiplicities(std::int64_t multiplicity) const;

  /// Every edge at its full multiplicity.
  EdgeCounts all_copies() const;
  /// Sum of cost * count over `part`.
  Rational cost_of(const EdgeCounts& part) const;

 private:
  int n_;
  std::uint32_t next_id_ = 0;
  std::vector<Edge> edges_;  // sorted by id
};

/// A proper nonempty node subset S of [0, n). Stored as a bitmask when n <= 64
/// and as a sorted index list above that.
class CutSet {
 public:
  static constexpr int kMaskLimit = 64;

  /// Throws std::invalid_argument unless the members form a proper nonempty subset.
  static CutSet from_members(int n, std::span<const int> members);
  static CutSet from_mask(int n, std::uint64_t mask);
  static CutSet from_side(const std::vector<bool>& side);

  int universe() const { return n_; }
  bool contains(int v) const;
  int size() const;
  std::vector<int> members() const;
  std::vector<bool> side() const;
  std::optional<std::uint64_t> mask() const;

  CutSet complement() const;
  /// The one of {S, complement} that excludes node n-1.
  CutSet canonical() const;

  friend bool operator==(const CutSet& a, const CutSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_ && a.list_ == b.list_;
  }
  friend bool operator<(const CutSet& a, const CutSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.bits_ != b.bits_) return a.bits_ < b.bits_;
    return a.list_ < b.list_;
  }

 private:
  CutSet(int n, std::uint64_t bits, std::vector<int> list)
      : n_(n), bits_(bits), list_(std::move(list)) {}

  int n_ = 0;
  std::uint64_t bits_ = 0;
  std::vector<int> list_;
};

/// "S = {0, 2, 3}".
std::string describe_cut(const CutSet& cut);

/// delta_part(S): ids of edges of `part` (count > 0) with exactly one end in S.
std::vector<EdgeId> cut_edges(const MultiGraph& g, const EdgeCounts& part, const CutSet& s);

/// d_part(S): crossing copies of `part`, counting its per-edge counts.
std::int64_t cut_count(const MultiGraph& g, const EdgeCounts& part, const CutSet& s);

/// Sum of w_e * multiplicity_e over crossing edges in the domain of w.
Rational cut_value(const MultiGraph& g, const EdgeWeighting& w, const CutSet& s);

/// Sum of w_e over crossing edges, where w_e already totals all copies of e.
Rational cut_mass(const MultiGraph& g, const EdgeWeighting& w, const CutSet& s);

/// Weights equal to each edge's multiplicity.
EdgeWeighting unit_weights(const MultiGraph& g);

struct ConnectivityCut {
  std::int64_t value = 0;
  std::optional<CutSet> cut;  // absent only when n < 2
};

/// Minimum over proper cuts of d_part(S), with a minimizing cut.
ConnectivityCut min_connectivity_cut(const MultiGraph& g, const EdgeCounts& part);

/// Minimum over proper cuts of d_part(S) (0 when disconnected). Requires n >= 2.
std::int64_t edge_connectivity(const MultiGraph& g, const EdgeCounts& part);

}  // namespace kconn
