#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/rng.hpp"

namespace dqc {

/// QPU index within a network.
using QpuId = std::uint8_t;

/// The quantum network under optimization: k QPUs with per-QPU qubit
/// capacities. QPU indices are stored in bytes, which bounds k at 256; a
/// larger network is rejected at construction.
struct NetworkSpec {
  std::uint32_t num_qpus = 2;
  std::vector<std::uint32_t> capacities;

  /// k QPUs with capacity ceil(n/k) each ("equal capacity").
  static NetworkSpec equal_split(std::uint32_t num_qubits, std::uint32_t k);

  std::uint64_t total_capacity() const;

  /// Throws structural_error on malformed specs; infeasible_error when the
  /// network cannot hold num_qubits at all.
  void validate(std::uint32_t num_qubits) const;
};

/// n x m matrix of QPU indices: cell (q,t) is the QPU hosting qubit q during
/// time step t. Stored column-major with 32 bytes of zeroed tail pad so the
/// cost kernels can issue full-width loads.
class AssignmentMatrix {
public:
  static constexpr std::size_t kPad = 32;

  AssignmentMatrix() = default;
  AssignmentMatrix(std::uint32_t num_qubits, std::uint32_t num_steps)
      : n_(num_qubits), m_(num_steps),
        buf_(static_cast<std::size_t>(num_qubits) * num_steps + kPad, 0) {}

  std::uint32_t num_qubits() const { return n_; }
  std::uint32_t num_steps() const { return m_; }

  QpuId at(std::uint32_t qubit, std::uint32_t step) const {
    return buf_[static_cast<std::size_t>(step) * n_ + qubit];
  }
  QpuId& at(std::uint32_t qubit, std::uint32_t step) {
    return buf_[static_cast<std::size_t>(step) * n_ + qubit];
  }

  const std::uint8_t* data() const { return buf_.data(); }
  std::uint8_t* data() { return buf_.data(); }

  std::uint8_t* column(std::uint32_t step) {
    return buf_.data() + static_cast<std::size_t>(step) * n_;
  }
  const std::uint8_t* column(std::uint32_t step) const {
    return buf_.data() + static_cast<std::size_t>(step) * n_;
  }

  friend bool operator==(const AssignmentMatrix&, const AssignmentMatrix&) = default;

private:
  std::uint32_t n_ = 0;
  std::uint32_t m_ = 0;
  std::vector<std::uint8_t> buf_;
};

/// Capacity penalty weight (rule 3).
struct PenaltyConfig {
  std::uint64_t delta = 100;
};

/// The three fitness terms and their sum. The EA minimizes total; fitness in
/// the maximization sense is -total.
struct CostBreakdown {
  std::uint64_t move_cost = 0;        // per-qubit partition changes
  std::uint64_t split_gate_cost = 0;  // distinct hosting QPUs - 1, per gate
  std::uint64_t capacity_penalty = 0; // delta per overfull (step, QPU)
  std::uint64_t total = 0;

  std::int64_t fitness() const { return -static_cast<std::int64_t>(total); }

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

/// Precomputed cost evaluator for one (circuit, network, penalty) instance.
/// Flattens the circuit's multi-qubit gates into kernel-friendly offset
/// arrays once; operator() is pure and safe to call concurrently.
class CostEvaluator {
public:
  CostEvaluator(const Circuit& circuit, const NetworkSpec& net,
                PenaltyConfig penalty = {});

  CostBreakdown operator()(const AssignmentMatrix& matrix) const;

  std::uint32_t num_qubits() const { return n_; }
  std::uint32_t num_steps() const { return m_; }
  std::uint32_t num_qpus() const { return k_; }

private:
  std::uint32_t n_;
  std::uint32_t m_;
  std::uint32_t k_;
  std::uint64_t delta_;
  std::vector<std::uint32_t> caps_;
  // 2-qubit gate operands as flat buffer offsets (t*n + q)
  std::vector<std::int32_t> pair_a_;
  std::vector<std::int32_t> pair_b_;
  // gates of arity >= 3: column base offset + operand qubits
  struct WideGate {
    std::int64_t col_base;
    std::vector<QubitId> qubits;
  };
  std::vector<WideGate> wide_gates_;
};

/// Fitness rules over one assignment matrix:
///   move_cost        = #(q,t), t>=1, with matrix(q,t) != matrix(q,t-1)
///   split_gate_cost  = sum over multi-qubit gates of
///                      (distinct QPUs hosting the gate's qubits) - 1
///   capacity_penalty = delta * #(t,p) with more qubits on p than caps[p]
/// Throws structural_error when the matrix dimensions do not match the
/// circuit. Convenience wrapper over CostEvaluator.
CostBreakdown evaluate_cost(const AssignmentMatrix& matrix,
                            const Circuit& circuit, const NetworkSpec& net,
                            PenaltyConfig penalty = {});

/// Every entry independently uniform over [0, k).
AssignmentMatrix random_matrix(std::uint32_t num_qubits,
                               std::uint32_t num_steps, std::uint32_t num_qpus,
                               SplitMix64& rng);

/// True iff no capacity violation and no split multi-qubit gate; the
/// teleportation count of a feasible solution is exactly its move_cost.
bool is_feasible(const AssignmentMatrix& matrix, const Circuit& circuit,
                 const NetworkSpec& net);

/// CSV serialization: one row per qubit, one column per time step.
std::string matrix_to_csv(const AssignmentMatrix& matrix);

/// JSON envelope with circuit name, network shape, cost breakdown and the
/// matrix itself (rows = qubits).
std::string assignment_to_json(const AssignmentMatrix& matrix,
                               const std::string& circuit_name,
                               const NetworkSpec& net,
                               const CostBreakdown& cost);

} // namespace dqc
