#pragma once

#include <string>
#include <string_view>

#include "dqc/circuit.hpp"

namespace dqc {

/// Parses an OpenQASM 2.0 program into a layered Circuit.
///
/// Supported statements: the OPENQASM 2.0 header, include "qelib1.inc",
/// qreg/creg declarations, applications of the standard-header gates
/// (register operands broadcast elementwise), barrier and measure. Barriers
/// and measurements are validated and dropped: neither carries teleportation
/// cost nor occupies a time step. Multiple qregs are flattened into one
/// dense qubit index space in declaration order.
///
/// Throws parse_error (with line/column) on malformed text, unsupported_error
/// on opaque/if/reset/custom gate definitions, structural_error on undeclared
/// or out-of-bounds operands.
Circuit parse_qasm(std::string_view source, std::string name = {});

/// Canonical OpenQASM 2.0 emission: one statement per line, lowercase gate
/// names, a single qreg. parse_qasm(emit_qasm(c)) reproduces c's gate list.
std::string emit_qasm(const Circuit& circuit);

} // namespace dqc
