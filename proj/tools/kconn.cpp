#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "kconn/cli.hpp"
#include "kconn/rational.hpp"

namespace {

using kconn::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--k", cfg.k, "connectivity requirement (default: instance header)")
      ->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--seed", cfg.seed, "seed for randomized cut listing and generation");
  cmd->add_option("--out", cfg.out_path, "write output here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-edge-connected spanning subgraphs by iterative LP relaxation"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string algorithm = "bicriteria";
  std::string listing = "auto";
  std::string cost_min = "1";
  std::string cost_max = "10";

  const std::map<std::string, kconn::CutListing> listings{
      {"auto", kconn::CutListing::Auto},
      {"exhaustive", kconn::CutListing::Exhaustive},
      {"contraction", kconn::CutListing::Contraction}};
  auto add_listing = [&](CLI::App* cmd) {
    cmd->add_option("--listing", listing, "near-minimum cut listing method")
        ->check(CLI::IsMember({"auto", "exhaustive", "contraction"}));
  };

  auto* solve = app.add_subcommand("solve", "run an approximation algorithm, emit a JSON report");
  solve->add_option("instance", cfg.instance_path, "instance file")->required();
  add_common(solve, cfg);
  add_listing(solve);
  solve->add_option("--algorithm", algorithm, "bicriteria | three-halves | ecsm")
      ->check(CLI::IsMember({"bicriteria", "three-halves", "ecsm"}));
  solve->add_flag("--oracle-checks", cfg.oracle_checks, "cross-check with brute-force oracles");

  auto* verify = app.add_subcommand("verify", "re-check a solve report from scratch");
  verify->add_option("instance", cfg.instance_path, "instance file")->required();
  verify->add_option("--report", cfg.report_path, "report written by solve")->required();
  add_common(verify, cfg);

  auto* gen = app.add_subcommand("gen", "generate a random k-edge-connected instance");
  gen->add_option("--n", cfg.nodes, "node count")->required();
  gen->add_option("--m", cfg.edges, "edge count")->required();
  gen->add_option("--cost-min", cost_min, "smallest cost (rational)");
  gen->add_option("--cost-max", cost_max, "largest cost (rational)");
  add_common(gen, cfg);

  auto* lp = app.add_subcommand("lp-value", "optimum of the Cut-LP relaxation");
  lp->add_option("instance", cfg.instance_path, "instance file")->required();
  add_common(lp, cfg);
  add_listing(lp);
  lp->add_flag("--unbounded", cfg.unbounded, "multi-subgraph LP (no x_e <= 1 bounds)");
  lp->add_flag("--oracle-checks", cfg.oracle_checks, "compare with the full enumeration LP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kconn::cli::kParseError;
  }

  try {
    cfg.algorithm = kconn::parse_algorithm(algorithm);
    cfg.listing = listings.at(listing);
    cfg.cost_min = kconn::parse_rational(cost_min);
    cfg.cost_max = kconn::parse_rational(cost_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kconn::cli::kParseError;
  }

  try {
    if (*solve) return kconn::cli::cmd_solve(cfg, std::cout, std::cerr);
    if (*verify) return kconn::cli::cmd_verify(cfg, std::cout, std::cerr);
    if (*gen) return kconn::cli::cmd_gen(cfg, std::cout, std::cerr);
    return kconn::cli::cmd_lp_value(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kconn::cli::kInternalAssertion;
  }
}
