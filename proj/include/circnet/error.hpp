#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circnet {

enum class ErrorKind {
  Parse,
  InvalidNetwork,
  InvalidEmbedding,
  NotConnected,
  Disconnected,
  SingularInterior,
  BadResponse,
  BadResistance,
  BadCardinality,
  RankDeficient,
  ZeroColumn,
  ScanExhausted,
  NonInteger,
  BoundaryVertex,
  NotMinimal,
  ZeroMinor,
  Underdetermined,
  Inconsistent,
  VerificationFailed,
  TooLarge,
  NotOdd,
  NotStandard,
  IndexOutOfRange,
};

std::string_view to_string(ErrorKind kind);

/// Stable process exit code for a failure class (used by the CLI).
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Violation {
  std::string code;
  std::string message;
};

/// Report-style validation result: empty iff the input is valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string message) {
    violations.push_back({std::move(code), std::move(message)});
  }
  bool has(std::string_view code) const {
    for (const auto& v : violations)
      if (v.code == code) return true;
    return false;
  }
};

}  // namespace circnet
