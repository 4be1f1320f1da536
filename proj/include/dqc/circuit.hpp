#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dqc {

/// Dense qubit index, 0..n-1 within its circuit.
using QubitId = std::uint32_t;

/// One gate application: name, ordered operands, real parameters (radians).
struct Gate {
  std::string name;
  std::vector<QubitId> qubits;
  std::vector<double> params;

  std::size_t arity() const { return qubits.size(); }
  bool is_multi_qubit() const { return qubits.size() > 1; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gates executable concurrently: no two share a qubit.
struct Layer {
  std::vector<Gate> gates;

  friend bool operator==(const Layer&, const Layer&) = default;
};

/// A circuit laid out on the time axis. depth() is the column count m of the
/// assignment matrices optimized over this circuit.
struct Circuit {
  std::uint32_t num_qubits = 0;
  std::vector<Layer> layers;
  std::string name;

  std::size_t depth() const { return layers.size(); }
  std::size_t gate_count() const;

  /// Gates in layer order, gate order preserved within each layer.
  std::vector<Gate> flatten() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Greedy as-soon-as-possible layering: each gate lands in the earliest layer
/// after the last layer occupied by any of its qubits. The resulting depth
/// equals the longest qubit-wise gate chain.
///
/// Throws structural_error if a gate references a qubit >= num_qubits or
/// repeats an operand.
Circuit layerize(const std::vector<Gate>& gates, std::uint32_t num_qubits,
                 std::string name = {});

/// Normalized (lo < hi) unordered qubit pairs touched by multi-qubit gates,
/// with occurrence counts. Gates of arity > 2 contribute every unordered
/// pair of their operands.
std::map<std::pair<QubitId, QubitId>, std::uint64_t>
interacting_pairs(const Circuit& circuit);

} // namespace dqc
