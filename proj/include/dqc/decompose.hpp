#pragma once

#include <string_view>
#include <vector>

#include "dqc/circuit.hpp"

namespace dqc {

/// Decomposition target for generated circuits: arbitrary 1-qubit gates
/// plus cx. Gate costs in this toolkit depend only on locality, so the
/// basis choice matters for circuit shape (gate count, depth), not for
/// unitary fidelity.
enum class Basis {
  CxRotations,
};

constexpr std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::CxRotations: return "cx-rotations";
  }
  return "?";
}

/// Rewrites every multi-qubit gate outside the basis into 1-qubit gates and
/// cx, using the textbook expansions (cp -> 2 cx + phases, swap -> 3 cx,
/// ccx -> 6 cx, ...). 1-qubit gates pass through untouched. Throws
/// structural_error for gates without a known expansion.
std::vector<Gate> decompose_to_basis(const std::vector<Gate>& gates, Basis basis);

} // namespace dqc
