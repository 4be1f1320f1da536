#include "dqc/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dqc/cost_kernels.hpp"
#include "dqc/errors.hpp"

namespace dqc {

NetworkSpec NetworkSpec::equal_split(std::uint32_t num_qubits, std::uint32_t k) {
  NetworkSpec net;
  net.num_qpus = k;
  std::uint32_t cap = k == 0 ? 0 : (num_qubits + k - 1) / k;
  net.capacities.assign(k, std::max(1u, cap));
  return net;
}

std::uint64_t NetworkSpec::total_capacity() const {
  return std::accumulate(capacities.begin(), capacities.end(),
                         std::uint64_t{0});
}

void NetworkSpec::validate(std::uint32_t num_qubits) const {
  if (num_qpus < 2)
    throw structural_error("network needs at least 2 QPUs");
  if (num_qpus > 256)
    throw structural_error("at most 256 QPUs supported");
  if (capacities.size() != num_qpus)
    throw structural_error("network lists " +
                           std::to_string(capacities.size()) +
                           " capacities for " + std::to_string(num_qpus) +
                           " QPUs");
  for (std::uint32_t c : capacities)
    if (c == 0) throw structural_error("QPU capacities must be positive");
  if (total_capacity() < num_qubits)
    throw infeasible_error("network capacity " +
                           std::to_string(total_capacity()) +
                           " cannot hold " + std::to_string(num_qubits) +
                           " qubits");
}

CostEvaluator::CostEvaluator(const Circuit& circuit, const NetworkSpec& net,
                             PenaltyConfig penalty)
    : n_(circuit.num_qubits),
      m_(static_cast<std::uint32_t>(circuit.depth())),
      k_(net.num_qpus), delta_(penalty.delta), caps_(net.capacities) {
  net.validate(circuit.num_qubits);
  if (penalty.delta < 1)
    throw structural_error("penalty delta must be >= 1");

  for (std::uint32_t t = 0; t < m_; ++t) {
    const std::int64_t base = static_cast<std::int64_t>(t) * n_;
    for (const Gate& gate : circuit.layers[t].gates) {
      if (gate.qubits.size() == 2) {
        pair_a_.push_back(static_cast<std::int32_t>(base + gate.qubits[0]));
        pair_b_.push_back(static_cast<std::int32_t>(base + gate.qubits[1]));
      } else if (gate.qubits.size() > 2) {
        wide_gates_.push_back(WideGate{base, gate.qubits});
      }
    }
  }
}

CostBreakdown CostEvaluator::operator()(const AssignmentMatrix& matrix) const {
  if (matrix.num_qubits() != n_ || matrix.num_steps() != m_)
    throw structural_error(
        "assignment matrix is " + std::to_string(matrix.num_qubits()) + "x" +
        std::to_string(matrix.num_steps()) + " but the circuit needs " +
        std::to_string(n_) + "x" + std::to_string(m_));

  const CostKernelTable& kernels = active_kernels();
  const std::uint8_t* buf = matrix.data();

  CostBreakdown cost;
  cost.move_cost = kernels.move_count(buf, n_, m_);
  cost.split_gate_cost =
      kernels.pair_split_count(buf, pair_a_.data(), pair_b_.data(),
                               pair_a_.size());
  for (const WideGate& gate : wide_gates_) {
    bool seen[256] = {};
    std::uint64_t distinct = 0;
    for (QubitId q : gate.qubits) {
      std::uint8_t p = buf[gate.col_base + q];
      distinct += !seen[p];
      seen[p] = true;
    }
    cost.split_gate_cost += distinct - 1;
  }
  cost.capacity_penalty =
      delta_ * kernels.capacity_violations(buf, n_, m_, caps_.data(), k_);
  cost.total = cost.move_cost + cost.split_gate_cost + cost.capacity_penalty;
  return cost;
}

CostBreakdown evaluate_cost(const AssignmentMatrix& matrix,
                            const Circuit& circuit, const NetworkSpec& net,
                            PenaltyConfig penalty) {
  return CostEvaluator(circuit, net, penalty)(matrix);
}

AssignmentMatrix random_matrix(std::uint32_t num_qubits,
                               std::uint32_t num_steps, std::uint32_t num_qpus,
                               SplitMix64& rng) {
  if (num_qubits < 1 || num_qpus < 1)
    throw structural_error("random_matrix needs n >= 1 and k >= 1");
  if (num_qpus > 256) throw structural_error("at most 256 QPUs supported");
  AssignmentMatrix matrix(num_qubits, num_steps);
  std::uint8_t* buf = matrix.data();
  const std::size_t total = static_cast<std::size_t>(num_qubits) * num_steps;
  for (std::size_t i = 0; i < total; ++i)
    buf[i] = static_cast<std::uint8_t>(rng.next_below(num_qpus));
  return matrix;
}

bool is_feasible(const AssignmentMatrix& matrix, const Circuit& circuit,
                 const NetworkSpec& net) {
  CostBreakdown cost = evaluate_cost(matrix, circuit, net);
  return cost.capacity_penalty == 0 && cost.split_gate_cost == 0;
}

std::string matrix_to_csv(const AssignmentMatrix& matrix) {
  std::ostringstream out;
  for (std::uint32_t q = 0; q < matrix.num_qubits(); ++q) {
    for (std::uint32_t t = 0; t < matrix.num_steps(); ++t) {
      if (t > 0) out << ',';
      out << static_cast<unsigned>(matrix.at(q, t));
    }
    out << '\n';
  }
  return out.str();
}

std::string assignment_to_json(const AssignmentMatrix& matrix,
                               const std::string& circuit_name,
                               const NetworkSpec& net,
                               const CostBreakdown& cost) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t q = 0; q < matrix.num_qubits(); ++q) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t t = 0; t < matrix.num_steps(); ++t)
      row.push_back(static_cast<unsigned>(matrix.at(q, t)));
    rows.push_back(std::move(row));
  }
  nlohmann::json doc = {
      {"circuit", circuit_name},
      {"num_qubits", matrix.num_qubits()},
      {"depth", matrix.num_steps()},
      {"num_qpus", net.num_qpus},
      {"capacities", net.capacities},
      {"cost",
       {{"move_cost", cost.move_cost},
        {"split_gate_cost", cost.split_gate_cost},
        {"capacity_penalty", cost.capacity_penalty},
        {"total", cost.total}}},
      {"matrix", std::move(rows)},
  };
  return doc.dump(2) + "\n";
}

} // namespace dqc
