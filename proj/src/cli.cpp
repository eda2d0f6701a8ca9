#include "kconn/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "kconn/errors.hpp"
#include "kconn/report.hpp"
#include "kconn/verify.hpp"

namespace kconn::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Guarantee {
  Rational factor;
  int connectivity;
  bool bounded;  // reference LP has x_e <= multiplicity
};

// Declared guarantee per algorithm, derived from (algorithm, k) only.
Guarantee guarantee_for(Algorithm algorithm, int k) {
  switch (algorithm) {
    case Algorithm::Bicriteria:
      return k % 2 == 0 ? Guarantee{Rational(1), k - 2, true}
                        : Guarantee{ratio(k - 1, k), k - 3, true};
    case Algorithm::ThreeHalves:
      return {Rational(3, 2), k - 1, true};
    case Algorithm::Ecsm: {
      const int p = k % 2 == 0 ? 2 : 3;
      return {1 + ratio(p, k), k + p - 2, false};
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << cfg.out_path << "'\n";
    return kParseError;
  }
  file << text;
  return kOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions options;
  options.listing.seed = cfg.seed;
  options.listing.method = cfg.listing;
  return options;
}

int resolve_k(const RunConfig& cfg, const Instance& inst, std::ostream& err) {
  int k = cfg.k.value_or(inst.k);
  if (k < 2) {
    err << "error: k must be at least 2 (got " << k << ")\n";
    return -1;
  }
  return k;
}

// Runs the brute-force oracles that fit their domains and records the outcome.
void attach_oracle_checks(RunReport& report, const MultiGraph& g) {
  const Guarantee guarantee = guarantee_for(report.algorithm, report.k);
  if (g.node_count() <= kFullLpMaxNodes) {
    OracleResult lp = full_cut_lp(g, report.k, guarantee.bounded);
    const Rational& reported = guarantee.bounded ? *report.tau : report.tau_unbounded;
    report.certified.oracle_lp_agrees =
        lp.value == reported && check_lp_witness(g, report.k, guarantee.bounded, lp);
  }
  try {
    OracleResult best = exact_optimum(g, report.k, report.algorithm == Algorithm::Ecsm);
    report.certified.oracle_optimum_bound = report.cost <= guarantee.factor * best.value;
  } catch (const OracleDomainExceeded&) {
  }
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InstanceInfeasible& e) {
    err << "infeasible instance: " << e.what() << "\nwitness: " << e.witness() << '\n';
    return kInfeasible;
  } catch (const TheoremViolation& e) {
    err << "internal assertion failed: " << e.what() << "\nextreme point: " << e.dump() << '\n';
    return kInternalAssertion;
  } catch (const OracleDomainExceeded& e) {
    err << "uncertified: " << e.what() << '\n';
    return kOracleDomain;
  }
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load_instance(cfg.instance_path);
    const int k = resolve_k(cfg, inst, err);
    if (k < 0) return static_cast<int>(kParseError);
    RunReport report = run_algorithm(cfg.algorithm, inst.graph, k, solver_options(cfg));
    if (cfg.oracle_checks) attach_oracle_checks(report, inst.graph);
    int rc = emit(cfg, report_to_json(report, inst.graph), out, err);
    if (rc != kOk) return rc;
    if (!report.certified.all()) {
      err << "error: a declared guarantee does not hold for this run\n";
      return static_cast<int>(kInternalAssertion);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load_instance(cfg.instance_path);
    RunReport report = report_from_json(read_file(cfg.report_path));
    const MultiGraph& g = inst.graph;
    if (cfg.k && *cfg.k != report.k) {
      err << "error: report is for k=" << report.k << ", not " << *cfg.k << '\n';
      return static_cast<int>(kVerificationFailed);
    }
    const int k = report.k;
    const Guarantee guarantee = guarantee_for(report.algorithm, k);

    Json verdict;
    verdict["algorithm"] = std::string(to_string(report.algorithm));
    verdict["k"] = k;
    if (g.node_count() > kFullLpMaxNodes) {
      verdict["status"] = "uncertified";
      verdict["reason"] = "instance exceeds the full Cut-LP oracle domain";
      emit(cfg, verdict.dump(2) + "\n", out, err);
      return static_cast<int>(kOracleDomain);
    }

    bool edges_known = true;
    for (const auto& [id, count] : report.edges) {
      if (!g.contains(id) || count <= 0 ||
          (report.algorithm != Algorithm::Ecsm && count > g.edge(id).multiplicity)) {
        edges_known = false;
      }
    }
    Json checks;
    checks["edges_valid"] = edges_known;
    bool pass = edges_known;
    if (edges_known) {
      OracleResult lp = full_cut_lp(g, k, guarantee.bounded);
      const Rational cost = g.cost_of(report.edges);
      const std::int64_t connectivity = edge_connectivity(g, report.edges);
      const Rational bound = guarantee.factor * lp.value;
      const Rational& reported_tau = guarantee.bounded && report.tau ? *report.tau
                                                                     : report.tau_unbounded;
      checks["lp_witness"] = check_lp_witness(g, k, guarantee.bounded, lp);
      checks["tau_matches"] = reported_tau == lp.value;
      checks["cost_matches"] = cost == report.cost;
      checks["connectivity_matches"] = connectivity == report.connectivity;
      checks["cost_within_bound"] = cost <= bound;
      checks["connectivity_within_bound"] = connectivity >= guarantee.connectivity;
      verdict["tau_oracle"] = to_fraction_string(lp.value);
      verdict["cost"] = to_fraction_string(cost);
      verdict["cost_bound"] = to_fraction_string(bound);
      verdict["connectivity"] = connectivity;
      verdict["connectivity_bound"] = guarantee.connectivity;
      for (const auto& [name, ok] : checks.items()) pass = pass && ok.get<bool>();
    }
    verdict["checks"] = checks;
    verdict["status"] = pass ? "pass" : "fail";
    int rc = emit(cfg, verdict.dump(2) + "\n", out, err);
    if (rc != kOk) return rc;
    return static_cast<int>(pass ? kOk : kVerificationFailed);
  });
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const int k = cfg.k.value_or(2);
    Instance inst;
    try {
      inst = generate_instance(cfg.nodes, cfg.edges, k, cfg.cost_min, cfg.cost_max, cfg.seed);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return static_cast<int>(kInfeasible);
    }
    std::string comment = "generated n=" + std::to_string(cfg.nodes) +
                          " m=" + std::to_string(cfg.edges) + " k=" + std::to_string(k) +
                          " seed=" + std::to_string(cfg.seed);
    return emit(cfg, format_instance(inst, comment), out, err);
  });
}

int cmd_lp_value(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load_instance(cfg.instance_path);
    const int k = resolve_k(cfg, inst, err);
    if (k < 0) return static_cast<int>(kParseError);
    const SolverOptions options = solver_options(cfg);
    const Rational tau = cfg.unbounded ? ecsm_lp_value(inst.graph, k, options)
                                       : cut_lp_value(inst.graph, k, options);
    Json j;
    j["k"] = k;
    j["bounded"] = !cfg.unbounded;
    j["tau"] = to_fraction_string(tau);
    j["tau_decimal"] = to_decimal_string(tau);
    j["method"] = "cutting-plane";
    bool agrees = true;
    if (cfg.oracle_checks) {
      OracleResult lp = full_cut_lp(inst.graph, k, !cfg.unbounded);
      agrees = lp.value == tau && check_lp_witness(inst.graph, k, !cfg.unbounded, lp);
      j["oracle_tau"] = to_fraction_string(lp.value);
      j["oracle_agrees"] = agrees;
    }
    int rc = emit(cfg, j.dump(2) + "\n", out, err);
    if (rc != kOk) return rc;
    return static_cast<int>(agrees ? kOk : kInternalAssertion);
  });
}

}  // namespace kconn::cli
