#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "kconn/instance.hpp"
#include "kconn/solver.hpp"

namespace kconn::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInfeasible = 2,
  kParseError = 3,
  kInternalAssertion = 4,
  kOracleDomain = 5,
};

struct RunConfig {
  std::string instance_path;
  std::optional<int> k;  // defaults to the instance header's k
  Algorithm algorithm = Algorithm::Bicriteria;
  std::uint64_t seed = 0;
  bool oracle_checks = false;
  std::string out_path;  // empty: write to the output stream
  CutListing listing = CutListing::Auto;

  // verify
  std::string report_path;

  // lp-value
  bool unbounded = false;

  // gen
  int nodes = 0;
  int edges = 0;
  Rational cost_min = 1;
  Rational cost_max = 10;
};

/// Random k-edge-connected multigraph on n nodes with m edges, costs drawn as
/// fractions with denominators 1..4 in [cost_min, cost_max]. Deterministic in
/// `seed`. Throws std::invalid_argument when 2m < nk or when bounded retries
/// find no k-edge-connected sample.
Instance generate_instance(int n, int m, int k, const Rational& cost_min,
                           const Rational& cost_max, std::uint64_t seed);

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_lp_value(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace kconn::cli
