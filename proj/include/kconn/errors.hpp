#pragma once

#include <stdexcept>
#include <string>

namespace kconn {

/// Malformed instance, report, or rational literal.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance cannot satisfy the requested connectivity (the LP is
/// infeasible). `witness` describes a cut that is too small.
class InstanceInfeasible : public std::runtime_error {
 public:
  InstanceInfeasible(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// A runtime assertion backing one of the algorithm's guarantees failed.
/// `dump` holds a serialized snapshot (typically the offending extreme point).
class TheoremViolation : public std::logic_error {
 public:
  TheoremViolation(const std::string& what, std::string dump)
      : std::logic_error(what), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

/// A brute-force oracle was asked to work outside its size caps.
class OracleDomainExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kconn
