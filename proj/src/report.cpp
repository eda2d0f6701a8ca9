#include "kconn/report.hpp"

#include <json.hpp>

#include "kconn/errors.hpp"

namespace kconn {
namespace {

using Json = nlohmann::ordered_json;

void put_rational(Json& j, const std::string& key, const Rational& value) {
  j[key] = to_fraction_string(value);
  j[key + "_decimal"] = to_decimal_string(value);
}

Rational get_rational(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ParseError(std::string("report: missing rational '") + key + "'");
  }
  return parse_rational(j[key].get<std::string>());
}

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("report: missing key '") + key + "'");
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("report: wrong type for '") + key + "'");
  }
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::optional<bool> get_optional_bool(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return get<bool>(j, key);
}

}  // namespace

std::string report_to_json(const RunReport& report, const MultiGraph& g) {
  Json j;
  j["algorithm"] = std::string(to_string(report.algorithm));
  j["k"] = report.k;
  j["k_effective"] = report.k_effective;
  j["mode"] = std::string(to_string(report.mode));
  if (report.tau) {
    put_rational(j, "tau", *report.tau);
  } else {
    j["tau"] = nullptr;
  }
  put_rational(j, "tau_effective", report.tau_effective);
  put_rational(j, "tau_unbounded", report.tau_unbounded);
  put_rational(j, "cost", report.cost);
  put_rational(j, "cost_factor_bound", report.cost_factor);
  put_rational(j, "cost_bound", report.cost_bound);
  j["connectivity"] = report.connectivity;
  j["connectivity_bound"] = report.connectivity_bound;
  j["iterations"] = report.iterations;
  j["extreme_points"] = report.extreme_points;

  Json trace = Json::array();
  for (const IterationTrace& t : report.trace) {
    Json row;
    row["iteration"] = t.iteration;
    row["fractional"] = t.fractional;
    row["integral"] = t.integral;
    row["rows"] = t.rows;
    row["integral_fixes"] = t.integral_fixes;
    row["zero_removals"] = t.zero_removals;
    row["separation_rounds"] = t.separation_rounds;
    row["lp_value"] = to_fraction_string(t.lp_value);
    trace.push_back(std::move(row));
  }
  j["trace"] = std::move(trace);

  Json edges = Json::array();
  for (const auto& [id, count] : report.edges) {
    Json e;
    e["id"] = index_of(id);
    if (g.contains(id)) {
      e["u"] = g.edge(id).u;
      e["v"] = g.edge(id).v;
    }
    e["count"] = count;
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);

  Json cert;
  cert["cost_within_bound"] = report.certified.cost_within_bound;
  cert["connectivity_within_bound"] = report.certified.connectivity_within_bound;
  cert["direct_lp_certificate"] = report.certified.direct_lp_certificate;
  cert["lp_scaling"] = report.certified.lp_scaling;
  cert["oracle_lp_agrees"] = optional_bool(report.certified.oracle_lp_agrees);
  cert["oracle_optimum_bound"] = optional_bool(report.certified.oracle_optimum_bound);
  cert["all"] = report.certified.all();
  j["certified"] = std::move(cert);
  return j.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("report: expected a JSON object");
  RunReport r;
  try {
    r.algorithm = parse_algorithm(get<std::string>(j, "algorithm"));
    r.mode = parse_relax_mode(get<std::string>(j, "mode"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  r.k = get<int>(j, "k");
  r.k_effective = get<int>(j, "k_effective");
  if (j.contains("tau") && !j["tau"].is_null()) r.tau = get_rational(j, "tau");
  r.tau_effective = get_rational(j, "tau_effective");
  r.tau_unbounded = get_rational(j, "tau_unbounded");
  r.cost = get_rational(j, "cost");
  r.cost_factor = get_rational(j, "cost_factor_bound");
  r.cost_bound = get_rational(j, "cost_bound");
  r.connectivity = get<std::int64_t>(j, "connectivity");
  r.connectivity_bound = get<int>(j, "connectivity_bound");
  r.iterations = get<int>(j, "iterations");
  r.extreme_points = get<std::int64_t>(j, "extreme_points");

  for (const Json& row : get<Json>(j, "trace")) {
    IterationTrace t;
    t.iteration = get<int>(row, "iteration");
    t.fractional = get<std::int64_t>(row, "fractional");
    t.integral = get<std::int64_t>(row, "integral");
    t.rows = get<std::int64_t>(row, "rows");
    t.integral_fixes = get<std::int64_t>(row, "integral_fixes");
    t.zero_removals = get<std::int64_t>(row, "zero_removals");
    t.separation_rounds = get<int>(row, "separation_rounds");
    t.lp_value = get_rational(row, "lp_value");
    r.trace.push_back(std::move(t));
  }
  for (const Json& e : get<Json>(j, "edges")) {
    auto count = get<std::int64_t>(e, "count");
    if (count <= 0) throw ParseError("report: edge count must be positive");
    r.edges[EdgeId{get<std::uint32_t>(e, "id")}] += count;
  }
  const Json cert = get<Json>(j, "certified");
  r.certified.cost_within_bound = get<bool>(cert, "cost_within_bound");
  r.certified.connectivity_within_bound = get<bool>(cert, "connectivity_within_bound");
  r.certified.direct_lp_certificate = get<bool>(cert, "direct_lp_certificate");
  r.certified.lp_scaling = get<bool>(cert, "lp_scaling");
  r.certified.oracle_lp_agrees = get_optional_bool(cert, "oracle_lp_agrees");
  r.certified.oracle_optimum_bound = get_optional_bool(cert, "oracle_optimum_bound");
  return r;
}

}  // namespace kconn
