#pragma once

#include <string>
#include <string_view>

#include "kconn/solver.hpp"

namespace kconn {

/// JSON report. Rationals are "num/den" strings; each also gets a
/// "<key>_decimal" string for humans, which parsing ignores.
std::string report_to_json(const RunReport& report, const MultiGraph& g);

/// Throws ParseError on malformed or incomplete reports.
RunReport report_from_json(std::string_view text);

}  // namespace kconn
