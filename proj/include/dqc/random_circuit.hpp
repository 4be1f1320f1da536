#pragma once

#include <cstdint>

#include "dqc/circuit.hpp"
#include "dqc/decompose.hpp"

namespace dqc {

/// Parameters of the seeded random-circuit generator. target_depth is the
/// depth before decomposition; the emitted circuit is decomposed to `basis`,
/// so its realized depth is >= target_depth.
struct RandomCircuitSpec {
  std::uint32_t num_qubits = 2;
  std::uint32_t target_depth = 10;
  std::uint64_t seed = 0;
  Basis basis = Basis::CxRotations;
};

/// Draws gates until the ASAP depth reaches target_depth, then decomposes.
///
/// Distribution (a fixed constant of the generator): each draw is a 1-qubit
/// gate or a 2-qubit gate with probability 1/2 each; 1-qubit gates uniform
/// over {h, x, rz, ry}, 2-qubit gates uniform over {cx, cz, cp, swap}, on
/// uniformly chosen distinct qubits; rotation/phase angles uniform in
/// [0, 2pi). Deterministic for a fixed spec, independent of host platform.
Circuit generate_random_circuit(const RandomCircuitSpec& spec);

} // namespace dqc
