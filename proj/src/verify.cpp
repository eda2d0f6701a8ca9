#include "kconn/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "kconn/errors.hpp"
#include "kconn/simplex.hpp"

namespace kconn {

std::string_view to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::FullLp: return "full-lp";
    case OracleMethod::SubsetEnum: return "subset-enum";
    case OracleMethod::MinCut: return "mincut";
  }
  return "?";
}

namespace {

std::int64_t edge_upper(const Edge& e, int k, bool bounded) {
  return bounded ? e.multiplicity : k;
}

}  // namespace

OracleResult full_cut_lp(const MultiGraph& g, int k, bool bounded) {
  const int n = g.node_count();
  if (n > kFullLpMaxNodes) {
    throw OracleDomainExceeded("full Cut-LP oracle supports n <= " +
                               std::to_string(kFullLpMaxNodes));
  }
  if (n < 2) throw std::invalid_argument("Cut-LP needs n >= 2");

  std::vector<const Edge*> edges;
  LinearProgram lp;
  for (const Edge& e : g.edges()) {
    edges.push_back(&e);
    lp.cost.push_back(e.cost);
    lp.upper.push_back(Rational(edge_upper(e, k, bounded)));
  }
  std::vector<CutSet> cuts;
  const std::uint64_t end = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    LinearProgram::Row row;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (((mask >> edges[j]->u) & 1U) != ((mask >> edges[j]->v) & 1U)) {
        row.support.push_back(static_cast<int>(j));
      }
    }
    row.rhs = k;
    lp.rows.push_back(std::move(row));
    cuts.push_back(CutSet::from_mask(n, mask));
  }

  LpSolution sol;
  try {
    sol = solve_program(lp);
  } catch (const LpInfeasible& e) {
    throw InstanceInfeasible("Cut-LP infeasible", describe_cut(cuts.at(e.row())));
  }
  OracleResult result;
  result.method = OracleMethod::FullLp;
  result.value = sol.objective;
  result.lp_point.emplace();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    result.lp_point->emplace(edges[j]->id, sol.values[j]);
    if (sol.upper_duals[j] != 0) result.upper_duals.emplace(edges[j]->id, sol.upper_duals[j]);
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (sol.row_duals[i] != 0) result.cut_duals.emplace_back(cuts[i], sol.row_duals[i]);
  }
  return result;
}

bool check_lp_witness(const MultiGraph& g, int k, bool bounded, const OracleResult& result) {
  if (!result.lp_point) return false;
  const int n = g.node_count();
  const EdgeWeighting& x = *result.lp_point;

  Rational primal = 0;
  for (const Edge& e : g.edges()) {
    auto it = x.find(e.id);
    if (it == x.end()) return false;
    if (it->second < 0 || it->second > edge_upper(e, k, bounded)) return false;
    primal += e.cost * it->second;
  }
  if (primal != result.value) return false;
  const std::uint64_t end = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    if (cut_mass(g, x, CutSet::from_mask(n, mask)) < k) return false;
  }

  // Dual: max sum k*pi_S - sum u_e*mu_e, s.t. sum_{S: e in delta(S)} pi_S - mu_e <= c_e.
  Rational dual = 0;
  EdgeWeighting load;
  for (const auto& [cut, pi] : result.cut_duals) {
    if (pi < 0) return false;
    dual += pi * k;
    for (const Edge& e : g.edges()) {
      if (cut.contains(e.u) != cut.contains(e.v)) load[e.id] += pi;
    }
  }
  for (const auto& [id, mu] : result.upper_duals) {
    if (mu < 0) return false;
    dual -= mu * edge_upper(g.edge(id), k, bounded);
    load[id] -= mu;
  }
  for (const Edge& e : g.edges()) {
    if (load[e.id] > e.cost) return false;
  }
  return dual == result.value;
}

OracleResult exact_optimum(const MultiGraph& g, int k, bool multi) {
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("exact optimum needs n >= 2");
  if (multi) {
    if (n > kMultiMaxNodes || g.edge_count() > kMultiMaxEdges) {
      throw OracleDomainExceeded("multi-subgraph oracle supports n <= 6 and at most 16 edges");
    }
  } else {
    std::int64_t copies = 0;
    for (const Edge& e : g.edges()) copies += e.multiplicity;
    if (copies > kSubsetMaxCopies) {
      throw OracleDomainExceeded("subset oracle supports at most 24 edge copies");
    }
  }

  std::vector<const Edge*> order;
  for (const Edge& e : g.edges()) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const Edge* a, const Edge* b) { return a->cost > b->cost; });
  const std::size_t m = order.size();
  std::vector<std::int64_t> cap(m);
  for (std::size_t i = 0; i < m; ++i) cap[i] = multi ? k : order[i]->multiplicity;

  std::vector<std::int64_t> chosen(cap);
  auto counts_with_rest = [&](std::size_t decided) {
    EdgeCounts counts;
    for (std::size_t i = 0; i < m; ++i) {
      std::int64_t c = i < decided ? chosen[i] : cap[i];
      if (c > 0) counts[order[i]->id] += c;
    }
    return counts;
  };
  auto completable = [&](std::size_t decided) {
    return edge_connectivity(g, counts_with_rest(decided)) >= k;
  };
  if (!completable(0)) {
    auto weak = min_connectivity_cut(g, counts_with_rest(0));
    throw InstanceInfeasible("no " + std::to_string(k) + "-edge-connected subgraph exists",
                             weak.cut ? describe_cut(*weak.cut) : std::string("n < 2"));
  }

  // Each node needs k incident copies; an undecided copy of e = uv costs at
  // least half its cost at each end.
  auto degree_bound = [&](std::size_t decided) {
    std::vector<std::int64_t> degree(n, 0);
    std::vector<std::optional<Rational>> cheapest(n);
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = *order[i];
      if (i < decided) {
        degree[e.u] += chosen[i];
        degree[e.v] += chosen[i];
      } else if (cap[i] > 0) {
        for (int end : {e.u, e.v}) {
          if (!cheapest[end] || e.cost < *cheapest[end]) cheapest[end] = e.cost;
        }
      }
    }
    Rational bound = 0;
    for (int v = 0; v < n; ++v) {
      std::int64_t deficit = std::max<std::int64_t>(0, k - degree[v]);
      if (deficit > 0 && cheapest[v]) bound += *cheapest[v] * deficit / 2;
    }
    return bound;
  };

  Rational best = 0;
  for (std::size_t i = 0; i < m; ++i) best += order[i]->cost * cap[i];
  std::vector<std::int64_t> best_choice = cap;

  std::function<void(std::size_t, const Rational&)> search = [&](std::size_t i,
                                                                 const Rational& cost) {
    if (i == m) {
      if (cost < best) {
        best = cost;
        best_choice = chosen;
      }
      return;
    }
    bool feasible = false;
    for (std::int64_t c = 0; c <= cap[i]; ++c) {
      chosen[i] = c;
      // Completability is monotone in c; once feasible, larger counts stay feasible.
      if (!feasible) {
        feasible = completable(i + 1);
        if (!feasible) continue;
      }
      Rational next = cost + order[i]->cost * c;
      if (next >= best) break;
      if (next + degree_bound(i + 1) >= best) continue;
      search(i + 1, next);
    }
    chosen[i] = cap[i];
  };
  search(0, Rational(0));

  OracleResult result;
  result.method = OracleMethod::SubsetEnum;
  result.value = best;
  result.subgraph.emplace();
  for (std::size_t i = 0; i < m; ++i) {
    if (best_choice[i] > 0) (*result.subgraph)[order[i]->id] += best_choice[i];
  }
  return result;
}

ConnectivityCertificate certify_connectivity(const MultiGraph& g, const EdgeCounts& part, int k) {
  ConnectivityCertificate cert;
  ConnectivityCut mc = min_connectivity_cut(g, part);
  cert.connectivity = mc.value;
  cert.ok = g.node_count() < 2 || mc.value >= k;
  if (!cert.ok) cert.witness = mc.cut;
  return cert;
}

}  // namespace kconn
