#include "dqc/qft.hpp"

#include <numbers>
#include <string>

#include "dqc/errors.hpp"

namespace dqc {

Circuit make_qft_circuit(std::uint32_t n, Basis basis) {
  if (n < 1) throw structural_error("qft needs at least 1 qubit");

  std::vector<Gate> gates;
  for (std::uint32_t j = n; j-- > 0;) {
    gates.push_back(Gate{"h", {j}, {}});
    for (std::uint32_t k = j; k-- > 0;) {
      double angle = std::numbers::pi / static_cast<double>(1ULL << (j - k));
      gates.push_back(Gate{"cp", {k, j}, {angle}});
    }
  }
  for (std::uint32_t i = 0; i < n / 2; ++i)
    gates.push_back(Gate{"swap", {i, n - 1 - i}, {}});

  return layerize(decompose_to_basis(gates, basis), n,
                  "qft" + std::to_string(n));
}

} // namespace dqc
