#include "dqc/circuit.hpp"

#include <algorithm>

#include "dqc/errors.hpp"

namespace dqc {

std::size_t Circuit::gate_count() const {
  std::size_t count = 0;
  for (const Layer& layer : layers) count += layer.gates.size();
  return count;
}

std::vector<Gate> Circuit::flatten() const {
  std::vector<Gate> gates;
  gates.reserve(gate_count());
  for (const Layer& layer : layers)
    gates.insert(gates.end(), layer.gates.begin(), layer.gates.end());
  return gates;
}

Circuit layerize(const std::vector<Gate>& gates, std::uint32_t num_qubits,
                 std::string name) {
  Circuit circuit;
  circuit.num_qubits = num_qubits;
  circuit.name = std::move(name);

  // next_free[q] = first layer index not yet occupied by qubit q
  std::vector<std::size_t> next_free(num_qubits, 0);

  for (const Gate& gate : gates) {
    if (gate.qubits.empty())
      throw structural_error("gate '" + gate.name + "' has no operands");
    std::size_t level = 0;
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
      QubitId q = gate.qubits[i];
      if (q >= num_qubits)
        throw structural_error("gate '" + gate.name + "' references qubit " +
                               std::to_string(q) + " but the circuit has " +
                               std::to_string(num_qubits) + " qubits");
      for (std::size_t j = i + 1; j < gate.qubits.size(); ++j)
        if (gate.qubits[j] == q)
          throw structural_error("gate '" + gate.name +
                                 "' repeats operand qubit " + std::to_string(q));
      level = std::max(level, next_free[q]);
    }
    if (level == circuit.layers.size()) circuit.layers.emplace_back();
    circuit.layers[level].gates.push_back(gate);
    for (QubitId q : gate.qubits) next_free[q] = level + 1;
  }
  return circuit;
}

std::map<std::pair<QubitId, QubitId>, std::uint64_t>
interacting_pairs(const Circuit& circuit) {
  std::map<std::pair<QubitId, QubitId>, std::uint64_t> pairs;
  for (const Layer& layer : circuit.layers) {
    for (const Gate& gate : layer.gates) {
      if (!gate.is_multi_qubit()) continue;
      for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < gate.qubits.size(); ++j) {
          QubitId lo = std::min(gate.qubits[i], gate.qubits[j]);
          QubitId hi = std::max(gate.qubits[i], gate.qubits[j]);
          ++pairs[{lo, hi}];
        }
      }
    }
  }
  return pairs;
}

} // namespace dqc
