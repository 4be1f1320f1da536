#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dqc {

/// Base class for all toolkit errors.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (QASM syntax). Carries a 1-based source location.
class parse_error : public error {
public:
  parse_error(const std::string& msg, int line, int column)
      : error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Syntactically valid construct that the toolkit deliberately rejects
/// (opaque declarations, classical control, custom gate bodies).
class unsupported_error : public parse_error {
public:
  using parse_error::parse_error;
};

/// Violated structural invariant: out-of-range qubit, dimension mismatch,
/// inconsistent network description.
class structural_error : public error {
public:
  using error::error;
};

/// Network cannot host the circuit (total capacity below the qubit count).
class infeasible_error : public error {
public:
  using error::error;
};

} // namespace dqc
