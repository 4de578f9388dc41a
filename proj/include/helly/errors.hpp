#pragma once

#include <stdexcept>
#include <string>

namespace helly {

// Failure taxonomy. Kinds map onto process exit codes in the CLI:
// input/validation problems -> 2, search/budget limits -> 4,
// internal inconsistencies -> 1. Negative verdicts (NotHelly, no
// solution) are results, not errors, and never throw.
enum class ErrorKind {
  Parse,            // malformed JSON or field of the wrong shape
  InvalidInput,     // well-formed but violates a documented precondition
  Singular,         // matrix inverse requested for a singular matrix
  GroupTooLarge,    // closure exceeded the element budget
  DimensionTooLarge,// ambient dimension above the enumeration cap
  BudgetExceeded,   // BFS or search budget exhausted before an answer
  Internal,         // invariant the code itself must maintain failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace helly
