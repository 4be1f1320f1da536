#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace dqc {

/// Signature of a standard-header gate: parameter and operand counts.
struct GateSignature {
  std::size_t num_params;
  std::size_t num_qubits;
};

/// Looks up a gate from the OpenQASM 2.0 standard header (qelib1.inc),
/// including the later additions (p, sx, swap, cp, cu). Returns nullopt for
/// unknown names.
std::optional<GateSignature> standard_gate(std::string_view name);

} // namespace dqc
