#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "dqc/assignment.hpp"
#include "dqc/circuit.hpp"
#include "dqc/rng.hpp"

namespace dqc {

/// Run parameters. Defaults follow the reference configuration
/// (population 400, 1000 generations, crossover and mutation rates 0.8,
/// delta 100).
struct EaConfig {
  std::uint32_t population_size = 400;
  std::uint32_t generations = 1000;
  double crossover_rate = 0.8;
  double mutation_rate = 0.8;
  double random_child_rate = 0.05;
  std::uint32_t elitism_count = 1;
  std::uint32_t tournament_size = 2;
  std::uint64_t master_seed = 0;
  PenaltyConfig penalty{};

  /// Worker threads for child production/evaluation. Results are
  /// bit-identical for every value; 0 picks hardware concurrency.
  std::uint32_t num_threads = 1;

  /// Stop once the best total reaches this value (off by default; with it
  /// unset the run always executes `generations` generations).
  std::optional<std::uint64_t> target_cost;

  void validate() const;
};

/// A candidate solution with its cost under the run's circuit and network.
struct Individual {
  AssignmentMatrix matrix;
  CostBreakdown cached_cost;
};

struct EaResult {
  Individual best;
  /// Best population total after each generation; non-increasing because
  /// survivor selection is elitist truncation over parents and children.
  std::vector<std::uint64_t> best_cost_per_generation;
  /// Mean population total after each generation (convergence export).
  std::vector<double> mean_cost_per_generation;
  std::uint64_t evaluations = 0;
  std::chrono::duration<double> wall_time{0};
};

/// Child columns [0, cut) come from a, [cut, m) from b. Requires matching
/// dimensions and 0 < cut < m.
AssignmentMatrix single_point_crossover(const AssignmentMatrix& a,
                                        const AssignmentMatrix& b,
                                        std::uint32_t cut);

/// Column t comes from a when choice[t] == 0, from b otherwise. choice must
/// have one entry per column.
AssignmentMatrix uniform_crossover(const AssignmentMatrix& a,
                                   const AssignmentMatrix& b,
                                   const std::vector<std::uint8_t>& choice);

/// Rewrites one uniformly chosen cell to a uniformly chosen QPU (possibly
/// the same value).
AssignmentMatrix mutate_cell(const AssignmentMatrix& matrix,
                             std::uint32_t num_qpus, SplitMix64& rng);

/// Uniformly permutes a sampled subset (size uniform in [2, m]) of one
/// uniformly chosen row. The row's value multiset is preserved.
AssignmentMatrix mutate_row_shuffle(const AssignmentMatrix& matrix,
                                    SplitMix64& rng);

/// Column analogue of mutate_row_shuffle (subset size uniform in [2, n]).
AssignmentMatrix mutate_col_shuffle(const AssignmentMatrix& matrix,
                                    SplitMix64& rng);

/// Evolutionary minimization of the teleportation cost of `circuit` on
/// `net`. Starts from uniform random matrices; each generation produces
/// population_size children (tournament parents, single-point or uniform
/// crossover, occasional fresh random individuals, one mutation operator per
/// mutated child) and keeps the best population_size of parents + children.
///
/// Fully deterministic for a fixed config: every stochastic choice for child
/// j of generation g draws from a private stream seeded by
/// (master_seed, g, j), so thread scheduling cannot alter results.
///
/// Throws infeasible_error when the network cannot hold the circuit.
EaResult run_ea(const Circuit& circuit, const NetworkSpec& net,
                const EaConfig& config);

/// "generation,best_total,mean_total" rows, one per generation run.
std::string history_to_csv(const EaResult& result);

} // namespace dqc
