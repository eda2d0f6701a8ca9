#include "kconn/separation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kconn/mincut.hpp"

namespace kconn {

namespace {

constexpr int kMaxNearCutRatio = 2;

bool use_exhaustive(int n, const ListingOptions& options) {
  switch (options.method) {
    case CutListing::Exhaustive: return true;
    case CutListing::Contraction: return false;
    case CutListing::Auto: return n <= options.exhaustive_limit;
  }
  return true;
}

// Cuts below `threshold`: all of them when the ratio allows listing,
// otherwise just the minimum cut.
std::vector<CutSet> cuts_below(const CapacitatedInstance& inst, const WeightedCut& min_cut,
                               const Rational& threshold, const ListingOptions& options) {
  if (min_cut.value >= threshold) return {};
  if (min_cut.value > 0 && threshold <= kMaxNearCutRatio * min_cut.value) {
    std::vector<CutSet> out;
    for (auto& wc : enumerate_cuts_below(inst, threshold, options)) out.push_back(wc.cut);
    return out;
  }
  return {min_cut.cut};
}

std::vector<CutSet> contracted_candidates(const EdgeWeighting& x, const SolverState& state,
                                          const ListingOptions& options) {
  const MultiGraph& g = *state.graph;
  const int n = g.node_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [id, count] : state.integral) {
    if (count <= 0) continue;
    const Edge& e = g.edge(id);
    parent[find(e.u)] = find(e.v);
  }
  std::vector<int> component(n, -1);
  std::vector<int> root_label(n, -1);
  int components = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (root_label[r] < 0) root_label[r] = components++;
    component[v] = root_label[r];
  }
  if (components < 2) return {};

  CapacitatedInstance contracted(components);
  for (const auto& [id, value] : x) {
    const Edge& e = g.edge(id);
    contracted.add(component[e.u], component[e.v], value);
  }
  WeightedCut min_cut = global_min_cut(contracted);
  std::vector<CutSet> out;
  for (const CutSet& c : cuts_below(contracted, min_cut, Rational(3), options)) {
    std::vector<bool> side(n);
    for (int v = 0; v < n; ++v) side[v] = c.contains(component[v]);
    out.push_back(CutSet::from_side(side).canonical());
  }
  return out;
}

}  // namespace

WeightedCut global_min_cut(const CapacitatedInstance& inst) {
  if (inst.node_count() < 2) throw std::invalid_argument("minimum cut needs n >= 2");
  auto result = stoer_wagner(inst.matrix());
  return {CutSet::from_side(result.side), std::move(result.value)};
}

std::vector<WeightedCut> enumerate_cuts_below(const CapacitatedInstance& inst,
                                              const Rational& bound,
                                              const ListingOptions& options) {
  const int n = inst.node_count();
  if (n < 2) throw std::invalid_argument("cut listing needs n >= 2");
  WeightedCut min_cut = global_min_cut(inst);
  if (bound <= min_cut.value) return {};
  if (min_cut.value > 0 && bound > kMaxNearCutRatio * min_cut.value) {
    throw std::invalid_argument("near-minimum cut listing: bound " + to_compact_string(bound) +
                                " exceeds twice the minimum cut " +
                                to_compact_string(min_cut.value));
  }
  if (use_exhaustive(n, options)) {
    return options.parallel ? kernels::list_cuts_below_parallel(inst, bound)
                            : kernels::list_cuts_below_serial(inst, bound);
  }
  return kernels::list_cuts_below_contraction(inst, bound, min_cut.value, options.seed,
                                              options.parallel);
}

CapacitatedInstance mixed_capacities(const SolverState& state, const EdgeWeighting& x) {
  const MultiGraph& g = *state.graph;
  CapacitatedInstance inst(g.node_count());
  for (const auto& [id, count] : state.integral) {
    const Edge& e = g.edge(id);
    inst.add(e.u, e.v, Rational(count));
  }
  for (const auto& [id, value] : x) {
    const Edge& e = g.edge(id);
    inst.add(e.u, e.v, value);
  }
  return inst;
}

std::vector<ViolatedCut> find_violated_cuts(const EdgeWeighting& x, const SolverState& state,
                                            const ListingOptions& options) {
  const MultiGraph& g = *state.graph;
  const int n = g.node_count();
  const int k = state.k;
  const int relax = relaxation_amount(state.mode);
  for (const auto& [id, value] : x) {
    if (value < 0) throw std::invalid_argument("separation point has a negative entry");
  }
  if (n < 2 || k - relax <= 0) return {};

  std::vector<CutSet> candidates;
  if (state.mode == RelaxMode::EvenRelax && k == 3) {
    candidates = contracted_candidates(x, state, options);
  } else {
    CapacitatedInstance mixed = mixed_capacities(state, x);
    WeightedCut min_cut = global_min_cut(mixed);
    const Rational phase_one(k - relax);
    if (min_cut.value < phase_one) {
      candidates = cuts_below(mixed, min_cut, phase_one, options);
    } else if (relax > 0) {
      for (auto& wc : enumerate_cuts_below(mixed, Rational(k), options)) {
        if (state.integral_degree(wc.cut) <= k - relax - 1) candidates.push_back(wc.cut);
      }
    }
  }

  // Re-derive every row from scratch; only strict violations are returned.
  std::vector<ViolatedCut> out;
  for (const CutSet& cut : candidates) {
    ViolatedCut vc{cut, state.integral_degree(cut), cut_mass(g, x, cut), 0};
    vc.demand = std::max<std::int64_t>(0, residual_demand(vc.integral_degree, k, state.mode));
    if (vc.lhs < vc.demand) out.push_back(std::move(vc));
  }
  std::sort(out.begin(), out.end(), [](const ViolatedCut& a, const ViolatedCut& b) {
    Rational va = a.violation(), vb = b.violation();
    if (va != vb) return va > vb;
    return a.cut < b.cut;
  });
  return out;
}

std::optional<ViolatedCut> find_violated_cut(const EdgeWeighting& x, const SolverState& state,
                                             const ListingOptions& options) {
  auto all = find_violated_cuts(x, state, options);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

}  // namespace kconn
