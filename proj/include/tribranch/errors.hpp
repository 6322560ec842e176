#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tribranch {

/// Raised when an operation's precondition does not hold (unknown curve,
/// illegal move, page with the wrong Euler characteristic, ...).
class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the spec-file reader for malformed or schema-invalid input.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string check;
  std::string message;
};

/// Result of a report-style validator. An empty report means valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string check, std::string message) {
    violations.push_back({std::move(check), std::move(message)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  bool mentions(const std::string& needle) const {
    for (const auto& v : violations)
      if (v.message.find(needle) != std::string::npos) return true;
    return false;
  }
};

}  // namespace tribranch
