#include "dqc/random_circuit.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "dqc/errors.hpp"
#include "dqc/rng.hpp"

namespace dqc {

Circuit generate_random_circuit(const RandomCircuitSpec& spec) {
  if (spec.num_qubits < 2)
    throw structural_error("random circuit needs at least 2 qubits");
  if (spec.target_depth < 1)
    throw structural_error("random circuit needs target_depth >= 1");

  SplitMix64 rng(derive_seed(spec.seed, spec.num_qubits, spec.target_depth));
  constexpr double two_pi = 2.0 * std::numbers::pi;
  static const char* const one_q[] = {"h", "x", "rz", "ry"};
  static const char* const two_q[] = {"cx", "cz", "cp", "swap"};

  std::vector<Gate> gates;
  std::vector<std::uint32_t> level(spec.num_qubits, 0);
  std::uint32_t depth = 0;

  while (depth < spec.target_depth) {
    Gate gate;
    if (rng.next_bool()) {
      gate.name = two_q[rng.next_below(4)];
      QubitId a = static_cast<QubitId>(rng.next_below(spec.num_qubits));
      QubitId b = static_cast<QubitId>(rng.next_below(spec.num_qubits - 1));
      if (b >= a) ++b;
      gate.qubits = {a, b};
      if (gate.name == "cp") gate.params = {rng.next_double_in(0.0, two_pi)};
    } else {
      gate.name = one_q[rng.next_below(4)];
      gate.qubits = {static_cast<QubitId>(rng.next_below(spec.num_qubits))};
      if (gate.name == "rz" || gate.name == "ry")
        gate.params = {rng.next_double_in(0.0, two_pi)};
    }
    std::uint32_t lvl = 0;
    for (QubitId q : gate.qubits) lvl = std::max(lvl, level[q]);
    for (QubitId q : gate.qubits) level[q] = lvl + 1;
    depth = std::max(depth, lvl + 1);
    gates.push_back(std::move(gate));
  }

  std::string name = "random_n" + std::to_string(spec.num_qubits) + "_d" +
                     std::to_string(spec.target_depth) + "_s" +
                     std::to_string(spec.seed);
  return layerize(decompose_to_basis(gates, spec.basis), spec.num_qubits,
                  std::move(name));
}

} // namespace dqc
