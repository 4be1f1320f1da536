#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "dqc/assignment.hpp"
#include "dqc/circuit.hpp"
#include "dqc/evolve.hpp"
#include "dqc/random_circuit.hpp"

namespace dqc {

/// Where an experiment's circuit comes from.
struct CircuitSource {
  enum class Kind { QasmFile, Random, Qft };
  Kind kind = Kind::Random;
  std::string qasm_path;          // QasmFile
  RandomCircuitSpec random_spec;  // Random
  std::uint32_t qft_qubits = 0;   // Qft

  static CircuitSource from_file(std::string path);
  static CircuitSource from_random(RandomCircuitSpec spec);
  static CircuitSource from_qft(std::uint32_t num_qubits);

  Circuit resolve() const;
};

/// One benchmark row: EA over num_seeds seeds against the graph-partitioning
/// baseline on a single circuit.
struct ExperimentSpec {
  CircuitSource source;
  NetworkSpec network;
  EaConfig ea;
  std::uint32_t num_seeds = 5;
  std::uint64_t seed_base = 0;
};

struct ExperimentReport {
  std::string circuit_name;
  std::uint32_t num_qubits = 0;
  std::uint32_t depth = 0;
  std::vector<std::uint64_t> ea_totals; // one per seed
  double ea_mean = 0.0;
  std::uint64_t gp_total = 0;
  std::vector<std::uint32_t> capacities;
  std::uint64_t seed_base = 0;
  // wall times are informational and never serialized into reports
  std::vector<std::chrono::duration<double>> ea_wall_times;
  std::chrono::duration<double> gp_wall_time{0};
};

/// Runs the EA num_seeds times (master seeds seed_base .. seed_base +
/// num_seeds - 1) and the KL baseline once (seeded with seed_base).
ExperimentReport run_experiment(const ExperimentSpec& spec);

enum class ReportFormat { Csv, Markdown };

/// Table II/III-shaped output; column order qubits, depth, EA mean, GP is
/// fixed. Deterministic: identical reports serialize to identical bytes.
std::string emit_report(const std::vector<ExperimentReport>& reports,
                        ReportFormat format);

/// Runs every experiment of the grid in order.
std::vector<ExperimentReport> sweep(const std::vector<ExperimentSpec>& suite);

/// The benchmark grid: seeded random circuits with 4 and 8 qubits at target
/// depths 10..50, then QFT circuits with 4, 8, 16, 32 and 50 qubits; two
/// QPUs of capacity ceil(n/2) each; EA per `ea` (reference parameters by
/// default) over num_seeds seeds.
std::vector<ExperimentSpec> paper_suite(std::uint32_t num_seeds = 5,
                                        std::uint64_t seed_base = 0,
                                        const EaConfig& ea = {});

} // namespace dqc
