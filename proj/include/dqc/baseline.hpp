#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dqc/circuit.hpp"

namespace dqc {

/// Weighted qubit-interaction graph: an edge per qubit pair that shares at
/// least one multi-qubit gate, weighted by the number of such gates.
struct InteractionGraph {
  std::uint32_t num_nodes = 0;
  std::map<std::pair<QubitId, QubitId>, std::uint64_t> edges; // lo < hi

  std::uint64_t weight(QubitId u, QubitId v) const {
    auto it = edges.find({std::min(u, v), std::max(u, v)});
    return it == edges.end() ? 0 : it->second;
  }
};

/// Balanced two-way split of the graph's nodes (sizes differ by at most 1).
struct Bisection {
  std::vector<QubitId> side_a;
  std::vector<QubitId> side_b;
};

InteractionGraph build_interaction_graph(const Circuit& circuit);

/// Seeded uniformly random balanced split (the KL starting point; exposed so
/// the never-worse-than-start property can be checked externally).
Bisection random_balanced_split(std::uint32_t num_nodes, std::uint64_t seed);

/// Classic Kernighan-Lin bisection refinement: starting from the seeded
/// random balanced split, repeat passes of gain-ordered tentative pair swaps
/// with locking, committing the best prefix of each pass, until a pass yields
/// no positive gain. Deterministic for a fixed seed. Requires >= 2 nodes.
Bisection kernighan_lin(const InteractionGraph& graph, std::uint64_t seed);

/// Total weight of edges crossing the bisection: the teleportation cost of
/// the static graph-partitioning baseline.
std::uint64_t gp_cost(const Bisection& bisection, const InteractionGraph& graph);

/// "u v weight" per line, ascending pairs (debug export).
std::string graph_to_edge_list(const InteractionGraph& graph);

} // namespace dqc
