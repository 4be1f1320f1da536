#pragma once

#include <cstdint>

#include "dqc/circuit.hpp"
#include "dqc/decompose.hpp"

namespace dqc {

/// Standard quantum Fourier transform on n qubits with the final qubit-order
/// swaps, decomposed to `basis`. Each controlled phase contributes two cx on
/// its qubit pair and each swap three, which fixes the interaction-graph
/// weights the partitioners see.
Circuit make_qft_circuit(std::uint32_t num_qubits,
                         Basis basis = Basis::CxRotations);

} // namespace dqc
