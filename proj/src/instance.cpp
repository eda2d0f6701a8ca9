#include "kconn/instance.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "kconn/errors.hpp"

namespace kconn {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view tok, int line_no, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid " + what + " '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_header = false;
  long declared_edges = 0;
  long seen_edges = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    };
    if (tokens[0] == "p") {
      if (have_header) fail("duplicate problem line");
      if (tokens.size() != 5 || tokens[1] != "kecss") fail("expected 'p kecss <n> <m> <k>'");
      int n = parse_int<int>(tokens[2], line_no, "node count");
      declared_edges = parse_int<long>(tokens[3], line_no, "edge count");
      inst.k = parse_int<int>(tokens[4], line_no, "k");
      if (n < 0 || declared_edges < 0) fail("negative size");
      inst.graph = MultiGraph(n);
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) fail("edge line before problem line");
      if (tokens.size() != 4 && tokens.size() != 5) fail("expected 'e <u> <v> <cost> [mult]'");
      int u = parse_int<int>(tokens[1], line_no, "endpoint");
      int v = parse_int<int>(tokens[2], line_no, "endpoint");
      Rational cost;
      try {
        cost = parse_rational(tokens[3]);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      std::int64_t mult = tokens.size() == 5 ? parse_int<std::int64_t>(tokens[4], line_no, "multiplicity") : 1;
      try {
        inst.graph.add_edge(u, v, cost, mult);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      ++seen_edges;
    } else {
      fail("unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw ParseError("missing problem line");
  if (seen_edges != declared_edges) {
    throw ParseError("header declares " + std::to_string(declared_edges) + " edges, found " +
                     std::to_string(seen_edges));
  }
  return inst;
}

Instance parse_instance_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst, std::string_view comment) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p kecss " << inst.graph.node_count() << ' ' << inst.graph.edge_count() << ' '
      << inst.k << '\n';
  for (const Edge& e : inst.graph.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << to_compact_string(e.cost);
    if (e.multiplicity != 1) out << ' ' << e.multiplicity;
    out << '\n';
  }
}

std::string format_instance(const Instance& inst, std::string_view comment) {
  std::ostringstream out;
  write_instance(out, inst, comment);
  return out.str();
}

}  // namespace kconn
