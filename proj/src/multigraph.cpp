#include "kconn/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kconn/mincut.hpp"

namespace kconn {

MultiGraph::MultiGraph(int node_count) : n_(node_count) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
}

EdgeId MultiGraph::add_edge(int u, int v, Rational cost, std::int64_t multiplicity) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                std::to_string(v));
  }
  if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
  if (cost < 0) throw std::invalid_argument("negative edge cost");
  if (multiplicity < 1) throw std::invalid_argument("edge multiplicity must be positive");
  EdgeId id{next_id_++};
  edges_.push_back(Edge{id, u, v, std::move(cost), multiplicity});
  return id;
}

void MultiGraph::remove_edge(EdgeId id) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) throw std::out_of_range("unknown edge id");
  edges_.erase(it);
}

bool MultiGraph::contains(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId x) { return e.id < x; });
  return it != edges_.end() && it->id == id;
}

const Edge& MultiGraph::edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) throw std::out_of_range("unknown edge id");
  return *it;
}

MultiGraph MultiGraph::scaled_multiplicities(std::int64_t factor) const {
  if (factor < 1) throw std::invalid_argument("multiplicity factor must be positive");
  MultiGraph copy = *this;
  for (Edge& e : copy.edges_) e.multiplicity *= factor;
  return copy;
}

MultiGraph MultiGraph::with_multiplicities(std::int64_t multiplicity) const {
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
  MultiGraph copy = *this;
  for (Edge& e : copy.edges_) e.multiplicity = multiplicity;
  return copy;
}

EdgeCounts MultiGraph::all_copies() const {
  EdgeCounts out;
  for (const Edge& e : edges_) out.emplace(e.id, e.multiplicity);
  return out;
}

Rational MultiGraph::cost_of(const EdgeCounts& part) const {
  Rational total = 0;
  for (const auto& [id, count] : part) total += edge(id).cost * count;
  return total;
}

// CutSet

CutSet CutSet::from_members(int n, std::span<const int> members) {
  std::vector<int> list(members.begin(), members.end());
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  if (list.empty() || static_cast<int>(list.size()) >= n) {
    throw std::invalid_argument("cut must be a proper nonempty node subset");
  }
  if (list.front() < 0 || list.back() >= n) throw std::invalid_argument("cut member out of range");
  if (n <= kMaskLimit) {
    std::uint64_t bits = 0;
    for (int v : list) bits |= std::uint64_t{1} << v;
    return CutSet(n, bits, {});
  }
  return CutSet(n, 0, std::move(list));
}

CutSet CutSet::from_mask(int n, std::uint64_t mask) {
  if (n > kMaskLimit || n < 2) throw std::invalid_argument("from_mask needs 2 <= n <= 64");
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (mask == 0 || (mask & full) == full || (mask & ~full) != 0) {
    throw std::invalid_argument("cut must be a proper nonempty node subset");
  }
  return CutSet(n, mask, {});
}

CutSet CutSet::from_side(const std::vector<bool>& side) {
  std::vector<int> members;
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v]) members.push_back(static_cast<int>(v));
  }
  return from_members(static_cast<int>(side.size()), members);
}

bool CutSet::contains(int v) const {
  if (v < 0 || v >= n_) return false;
  if (n_ <= kMaskLimit) return (bits_ >> v) & 1U;
  return std::binary_search(list_.begin(), list_.end(), v);
}

int CutSet::size() const {
  if (n_ <= kMaskLimit) return __builtin_popcountll(bits_);
  return static_cast<int>(list_.size());
}

std::vector<int> CutSet::members() const {
  if (n_ > kMaskLimit) return list_;
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if ((bits_ >> v) & 1U) out.push_back(v);
  }
  return out;
}

std::vector<bool> CutSet::side() const {
  std::vector<bool> out(n_, false);
  for (int v : members()) out[v] = true;
  return out;
}

std::optional<std::uint64_t> CutSet::mask() const {
  if (n_ > kMaskLimit) return std::nullopt;
  return bits_;
}

CutSet CutSet::complement() const {
  if (n_ <= kMaskLimit) {
    std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    return CutSet(n_, full & ~bits_, {});
  }
  std::vector<int> out;
  out.reserve(n_ - list_.size());
  auto it = list_.begin();
  for (int v = 0; v < n_; ++v) {
    if (it != list_.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  return CutSet(n_, 0, std::move(out));
}

CutSet CutSet::canonical() const { return contains(n_ - 1) ? complement() : *this; }

// Cut primitives

std::string describe_cut(const CutSet& cut) {
  std::string out = "S = {";
  bool first = true;
  for (int v : cut.members()) {
    out += (first ? "" : ", ") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::vector<EdgeId> cut_edges(const MultiGraph& g, const EdgeCounts& part, const CutSet& s) {
  if (s.universe() != g.node_count()) throw std::invalid_argument("cut over a different node set");
  std::vector<EdgeId> out;
  for (const auto& [id, count] : part) {
    if (count <= 0) continue;
    const Edge& e = g.edge(id);
    if (s.contains(e.u) != s.contains(e.v)) out.push_back(id);
  }
  return out;
}

std::int64_t cut_count(const MultiGraph& g, const EdgeCounts& part, const CutSet& s) {
  std::int64_t total = 0;
  for (EdgeId id : cut_edges(g, part, s)) total += part.at(id);
  return total;
}

Rational cut_value(const MultiGraph& g, const EdgeWeighting& w, const CutSet& s) {
  if (s.universe() != g.node_count()) throw std::invalid_argument("cut over a different node set");
  Rational total = 0;
  for (const auto& [id, weight] : w) {
    const Edge& e = g.edge(id);
    if (s.contains(e.u) != s.contains(e.v)) total += weight * e.multiplicity;
  }
  return total;
}

Rational cut_mass(const MultiGraph& g, const EdgeWeighting& w, const CutSet& s) {
  if (s.universe() != g.node_count()) throw std::invalid_argument("cut over a different node set");
  Rational total = 0;
  for (const auto& [id, weight] : w) {
    const Edge& e = g.edge(id);
    if (s.contains(e.u) != s.contains(e.v)) total += weight;
  }
  return total;
}

EdgeWeighting unit_weights(const MultiGraph& g) {
  EdgeWeighting w;
  for (const Edge& e : g.edges()) w.emplace(e.id, Rational(1));
  return w;
}

ConnectivityCut min_connectivity_cut(const MultiGraph& g, const EdgeCounts& part) {
  const int n = g.node_count();
  if (n < 2) return {};
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  for (const auto& [id, count] : part) {
    if (count <= 0) continue;
    const Edge& e = g.edge(id);
    w[e.u][e.v] += count;
    w[e.v][e.u] += count;
  }
  auto result = stoer_wagner(std::move(w));
  return {result.value, CutSet::from_side(result.side)};
}

std::int64_t edge_connectivity(const MultiGraph& g, const EdgeCounts& part) {
  if (g.node_count() < 2) throw std::invalid_argument("edge connectivity needs n >= 2");
  return min_connectivity_cut(g, part).value;
}

}  // namespace kconn
