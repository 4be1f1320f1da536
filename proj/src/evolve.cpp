#include "dqc/evolve.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>
#include <thread>

#include "dqc/errors.hpp"

namespace dqc {

namespace {

void check_same_shape(const AssignmentMatrix& a, const AssignmentMatrix& b) {
  if (a.num_qubits() != b.num_qubits() || a.num_steps() != b.num_steps())
    throw structural_error("crossover parents differ in shape");
}

void mutate_cell_inplace(AssignmentMatrix& matrix, std::uint32_t num_qpus,
                         SplitMix64& rng) {
  const std::uint32_t n = matrix.num_qubits(), m = matrix.num_steps();
  if (n == 0 || m == 0) return;
  std::uint32_t q = static_cast<std::uint32_t>(rng.next_below(n));
  std::uint32_t t = static_cast<std::uint32_t>(rng.next_below(m));
  matrix.at(q, t) = static_cast<QpuId>(rng.next_below(num_qpus));
}

// Permutes a uniformly sampled subset of `values` (stride apart), subset
// size uniform in [2, count].
void shuffle_subset(std::uint8_t* values, std::size_t count, std::size_t stride,
                    SplitMix64& rng) {
  if (count < 2) return;
  std::size_t subset = 2 + rng.next_below(count - 1);
  // partial Fisher-Yates picks `subset` distinct positions...
  std::vector<std::uint32_t> positions(count);
  std::iota(positions.begin(), positions.end(), 0u);
  for (std::size_t i = 0; i < subset; ++i) {
    std::size_t j = i + rng.next_below(count - i);
    std::swap(positions[i], positions[j]);
  }
  // ...then permutes the values sitting there.
  std::vector<std::uint8_t> picked(subset);
  for (std::size_t i = 0; i < subset; ++i)
    picked[i] = values[positions[i] * stride];
  shuffle(std::span<std::uint8_t>(picked), rng);
  for (std::size_t i = 0; i < subset; ++i)
    values[positions[i] * stride] = picked[i];
}

void mutate_row_shuffle_inplace(AssignmentMatrix& matrix, SplitMix64& rng) {
  const std::uint32_t n = matrix.num_qubits(), m = matrix.num_steps();
  if (n == 0 || m < 2) return;
  std::uint32_t q = static_cast<std::uint32_t>(rng.next_below(n));
  shuffle_subset(matrix.data() + q, m, n, rng);
}

void mutate_col_shuffle_inplace(AssignmentMatrix& matrix, SplitMix64& rng) {
  const std::uint32_t n = matrix.num_qubits(), m = matrix.num_steps();
  if (m == 0 || n < 2) return;
  std::uint32_t t = static_cast<std::uint32_t>(rng.next_below(m));
  shuffle_subset(matrix.column(t), n, 1, rng);
}

void single_point_into(AssignmentMatrix& child, const AssignmentMatrix& a,
                       const AssignmentMatrix& b, std::uint32_t cut) {
  const std::size_t n = a.num_qubits();
  const std::size_t left = n * cut;
  const std::size_t total = n * a.num_steps();
  std::memcpy(child.data(), a.data(), left);
  std::memcpy(child.data() + left, b.data() + left, total - left);
}

void uniform_into(AssignmentMatrix& child, const AssignmentMatrix& a,
                  const AssignmentMatrix& b,
                  const std::vector<std::uint8_t>& choice) {
  const std::size_t n = a.num_qubits();
  for (std::uint32_t t = 0; t < a.num_steps(); ++t)
    std::memcpy(child.column(t), (choice[t] ? b : a).column(t), n);
}

} // namespace

void EaConfig::validate() const {
  if (population_size < 2)
    throw structural_error("population_size must be >= 2");
  if (generations < 1) throw structural_error("generations must be >= 1");
  auto rate_ok = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!rate_ok(crossover_rate) || !rate_ok(mutation_rate) ||
      !rate_ok(random_child_rate))
    throw structural_error("rates must lie in [0, 1]");
  if (elitism_count < 1 || elitism_count >= population_size)
    throw structural_error("elitism_count must be in [1, population_size)");
  if (tournament_size < 1)
    throw structural_error("tournament_size must be >= 1");
  if (penalty.delta < 1) throw structural_error("delta must be >= 1");
}

AssignmentMatrix single_point_crossover(const AssignmentMatrix& a,
                                        const AssignmentMatrix& b,
                                        std::uint32_t cut) {
  check_same_shape(a, b);
  if (cut == 0 || cut >= a.num_steps())
    throw structural_error("cut-off point must satisfy 0 < cut < m");
  AssignmentMatrix child(a.num_qubits(), a.num_steps());
  single_point_into(child, a, b, cut);
  return child;
}

AssignmentMatrix uniform_crossover(const AssignmentMatrix& a,
                                   const AssignmentMatrix& b,
                                   const std::vector<std::uint8_t>& choice) {
  check_same_shape(a, b);
  if (choice.size() != a.num_steps())
    throw structural_error("need one parent choice per column");
  AssignmentMatrix child(a.num_qubits(), a.num_steps());
  uniform_into(child, a, b, choice);
  return child;
}

AssignmentMatrix mutate_cell(const AssignmentMatrix& matrix,
                             std::uint32_t num_qpus, SplitMix64& rng) {
  AssignmentMatrix out = matrix;
  mutate_cell_inplace(out, num_qpus, rng);
  return out;
}

AssignmentMatrix mutate_row_shuffle(const AssignmentMatrix& matrix,
                                    SplitMix64& rng) {
  AssignmentMatrix out = matrix;
  mutate_row_shuffle_inplace(out, rng);
  return out;
}

AssignmentMatrix mutate_col_shuffle(const AssignmentMatrix& matrix,
                                    SplitMix64& rng) {
  AssignmentMatrix out = matrix;
  mutate_col_shuffle_inplace(out, rng);
  return out;
}

namespace {

// Tournament over the parent population; ties resolve to the lower index so
// results do not depend on evaluation order.
std::uint32_t tournament(const std::vector<Individual>& pop,
                         std::uint32_t size, SplitMix64& rng) {
  std::uint32_t winner = static_cast<std::uint32_t>(rng.next_below(pop.size()));
  for (std::uint32_t round = 1; round < size; ++round) {
    std::uint32_t challenger =
        static_cast<std::uint32_t>(rng.next_below(pop.size()));
    if (pop[challenger].cached_cost.total < pop[winner].cached_cost.total ||
        (pop[challenger].cached_cost.total == pop[winner].cached_cost.total &&
         challenger < winner))
      winner = challenger;
  }
  return winner;
}

} // namespace

EaResult run_ea(const Circuit& circuit, const NetworkSpec& net,
                const EaConfig& config) {
  config.validate();
  net.validate(circuit.num_qubits);
  const auto start_time = std::chrono::steady_clock::now();

  const CostEvaluator evaluate(circuit, net, config.penalty);
  const std::uint32_t n = circuit.num_qubits;
  const std::uint32_t m = static_cast<std::uint32_t>(circuit.depth());
  const std::uint32_t k = net.num_qpus;
  const std::uint32_t pop_size = config.population_size;

  std::uint32_t threads = config.num_threads == 0
                              ? std::max(1u, std::thread::hardware_concurrency())
                              : config.num_threads;
  // Parallelism only pays off once per-generation work is substantial.
  if (static_cast<std::uint64_t>(pop_size) * n * std::max(m, 1u) < 1u << 16)
    threads = 1;

  auto for_each_slot = [&](std::uint32_t count, auto&& fn) {
    if (threads <= 1 || count < 2 * threads) {
      for (std::uint32_t j = 0; j < count; ++j) fn(j);
      return;
    }
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::uint32_t chunk = (count + threads - 1) / threads;
    for (std::uint32_t w = 0; w < threads; ++w) {
      const std::uint32_t lo = w * chunk;
      const std::uint32_t hi = std::min(count, lo + chunk);
      if (lo >= hi) break;
      workers.emplace_back([lo, hi, &fn] {
        for (std::uint32_t j = lo; j < hi; ++j) fn(j);
      });
    }
    for (std::thread& worker : workers) worker.join();
  };

  // generation 0: uniform random population
  std::vector<Individual> population(pop_size);
  for_each_slot(pop_size, [&](std::uint32_t j) {
    SplitMix64 rng(derive_seed(config.master_seed, 0, j));
    population[j].matrix = random_matrix(n, m, k, rng);
    population[j].cached_cost = evaluate(population[j].matrix);
  });

  EaResult result;
  result.evaluations = pop_size;
  result.best_cost_per_generation.reserve(config.generations);
  result.mean_cost_per_generation.reserve(config.generations);

  std::vector<Individual> children(pop_size);
  std::vector<std::uint32_t> order(2 * pop_size);

  for (std::uint32_t gen = 1; gen <= config.generations; ++gen) {
    for_each_slot(pop_size, [&](std::uint32_t j) {
      SplitMix64 rng(derive_seed(config.master_seed, gen, j));
      Individual& child = children[j];

      if (rng.next_double() < config.random_child_rate) {
        child.matrix = random_matrix(n, m, k, rng);
      } else {
        const std::uint32_t pa = tournament(population, config.tournament_size, rng);
        if (rng.next_double() < config.crossover_rate) {
          const std::uint32_t pb =
              tournament(population, config.tournament_size, rng);
          const bool single_point = rng.next_bool();
          child.matrix = AssignmentMatrix(n, m);
          if (single_point && m >= 2) {
            const std::uint32_t cut =
                1 + static_cast<std::uint32_t>(rng.next_below(m - 1));
            single_point_into(child.matrix, population[pa].matrix,
                              population[pb].matrix, cut);
          } else {
            // m < 2 leaves no interior cut; fall through to column picks
            for (std::uint32_t t = 0; t < m; ++t)
              std::memcpy(child.matrix.column(t),
                          (rng.next_bool() ? population[pb] : population[pa])
                              .matrix.column(t),
                          n);
          }
        } else {
          child.matrix = population[pa].matrix;
        }
      }

      if (m >= 1 && rng.next_double() < config.mutation_rate) {
        switch (rng.next_below(3)) {
          case 0: mutate_cell_inplace(child.matrix, k, rng); break;
          case 1: mutate_row_shuffle_inplace(child.matrix, rng); break;
          default: mutate_col_shuffle_inplace(child.matrix, rng); break;
        }
      }
      child.cached_cost = evaluate(child.matrix);
    });
    result.evaluations += pop_size;

    // elitist truncation over parents ∪ children; ties prefer parents
    std::iota(order.begin(), order.end(), 0u);
    auto total_of = [&](std::uint32_t idx) {
      return idx < pop_size ? population[idx].cached_cost.total
                            : children[idx - pop_size].cached_cost.total;
    };
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t lhs, std::uint32_t rhs) {
                const std::uint64_t lt = total_of(lhs), rt = total_of(rhs);
                return lt != rt ? lt < rt : lhs < rhs;
              });

    std::vector<Individual> next;
    next.reserve(pop_size);
    for (std::uint32_t rank = 0; rank < pop_size; ++rank) {
      const std::uint32_t idx = order[rank];
      next.push_back(std::move(idx < pop_size ? population[idx]
                                              : children[idx - pop_size]));
    }
    population = std::move(next);

    const std::uint64_t best = population.front().cached_cost.total;
    double sum = 0;
    for (const Individual& ind : population)
      sum += static_cast<double>(ind.cached_cost.total);
    result.best_cost_per_generation.push_back(best);
    result.mean_cost_per_generation.push_back(sum /
                                              static_cast<double>(pop_size));

    if (config.target_cost && best <= *config.target_cost) break;
  }

  result.best = population.front();
  result.wall_time = std::chrono::steady_clock::now() - start_time;
  return result;
}

std::string history_to_csv(const EaResult& result) {
  std::ostringstream out;
  out << "generation,best_total,mean_total\n";
  for (std::size_t g = 0; g < result.best_cost_per_generation.size(); ++g) {
    out << (g + 1) << ',' << result.best_cost_per_generation[g] << ',';
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", result.mean_cost_per_generation[g]);
    out << buf << '\n';
  }
  return out.str();
}

} // namespace dqc
