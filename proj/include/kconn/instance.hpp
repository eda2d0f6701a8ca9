#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "kconn/multigraph.hpp"

namespace kconn {

/// A k-ECSS / k-ECSM instance as stored on disk.
///
///   c free-form comment
///   p kecss <n> <m> <k>
///   e <u> <v> <cost> [mult]      (m lines, 0-based nodes)
///
/// Costs are integers, fractions ("7/2") or decimals ("3.5"). Multiplicity
/// defaults to 1. Edge ids follow line order.
struct Instance {
  MultiGraph graph{0};
  int k = 0;
};

/// Throws ParseError with a line number on malformed input.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(std::string_view text);
Instance load_instance(const std::string& path);

void write_instance(std::ostream& out, const Instance& inst, std::string_view comment = {});
std::string format_instance(const Instance& inst, std::string_view comment = {});

}  // namespace kconn
