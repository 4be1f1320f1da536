#include "dqc/baseline.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dqc/errors.hpp"
#include "dqc/rng.hpp"

namespace dqc {

InteractionGraph build_interaction_graph(const Circuit& circuit) {
  InteractionGraph graph;
  graph.num_nodes = circuit.num_qubits;
  graph.edges = interacting_pairs(circuit);
  return graph;
}

Bisection random_balanced_split(std::uint32_t num_nodes, std::uint64_t seed) {
  if (num_nodes < 2)
    throw structural_error("bisection needs at least 2 nodes");
  std::vector<QubitId> nodes(num_nodes);
  std::iota(nodes.begin(), nodes.end(), 0u);
  SplitMix64 rng(derive_seed(seed, num_nodes, 0x6b6c)); // "kl"
  shuffle(std::span<QubitId>(nodes), rng);
  const std::uint32_t half = (num_nodes + 1) / 2;
  Bisection split;
  split.side_a.assign(nodes.begin(), nodes.begin() + half);
  split.side_b.assign(nodes.begin() + half, nodes.end());
  std::sort(split.side_a.begin(), split.side_a.end());
  std::sort(split.side_b.begin(), split.side_b.end());
  return split;
}

Bisection kernighan_lin(const InteractionGraph& graph, std::uint64_t seed) {
  const std::uint32_t n = graph.num_nodes;
  Bisection start = random_balanced_split(n, seed);

  // side[v]: 0 = A, 1 = B
  std::vector<std::uint8_t> side(n, 1);
  for (QubitId v : start.side_a) side[v] = 0;

  // dense weights; interaction graphs are small (nodes = qubits)
  std::vector<std::int64_t> w(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [pair, weight] : graph.edges) {
    w[static_cast<std::size_t>(pair.first) * n + pair.second] =
        static_cast<std::int64_t>(weight);
    w[static_cast<std::size_t>(pair.second) * n + pair.first] =
        static_cast<std::int64_t>(weight);
  }

  std::vector<std::int64_t> gain_d(n);     // external - internal
  std::vector<std::uint8_t> locked(n);
  std::vector<std::pair<QubitId, QubitId>> swaps;
  std::vector<std::int64_t> gains;

  for (;;) {
    for (std::uint32_t v = 0; v < n; ++v) {
      std::int64_t d = 0;
      for (std::uint32_t u = 0; u < n; ++u)
        if (u != v)
          d += side[u] != side[v] ? w[static_cast<std::size_t>(v) * n + u]
                                  : -w[static_cast<std::size_t>(v) * n + u];
      gain_d[v] = d;
    }
    std::fill(locked.begin(), locked.end(), 0);
    swaps.clear();
    gains.clear();

    const std::uint32_t pairs_per_pass = n / 2;
    for (std::uint32_t step = 0; step < pairs_per_pass; ++step) {
      bool found = false;
      std::int64_t best_gain = 0;
      QubitId best_a = 0, best_b = 0;
      for (std::uint32_t a = 0; a < n; ++a) {
        if (locked[a] || side[a] != 0) continue;
        for (std::uint32_t b = 0; b < n; ++b) {
          if (locked[b] || side[b] != 1) continue;
          std::int64_t g = gain_d[a] + gain_d[b] -
                           2 * w[static_cast<std::size_t>(a) * n + b];
          if (!found || g > best_gain) {
            found = true;
            best_gain = g;
            best_a = a;
            best_b = b;
          }
        }
      }
      if (!found) break;

      locked[best_a] = locked[best_b] = 1;
      swaps.emplace_back(best_a, best_b);
      gains.push_back(best_gain);
      // tentative swap: update D of unlocked nodes as if a and b switched
      for (std::uint32_t u = 0; u < n; ++u) {
        if (locked[u]) continue;
        const std::int64_t wua = w[static_cast<std::size_t>(u) * n + best_a];
        const std::int64_t wub = w[static_cast<std::size_t>(u) * n + best_b];
        if (side[u] == 0)
          gain_d[u] += 2 * wua - 2 * wub;
        else
          gain_d[u] += 2 * wub - 2 * wua;
      }
    }

    // best prefix of the tentative swap sequence
    std::int64_t best_sum = 0, running = 0;
    std::size_t best_prefix = 0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
      running += gains[i];
      if (running > best_sum) {
        best_sum = running;
        best_prefix = i + 1;
      }
    }
    if (best_sum <= 0) break;
    for (std::size_t i = 0; i < best_prefix; ++i) {
      side[swaps[i].first] = 1;
      side[swaps[i].second] = 0;
    }
  }

  Bisection result;
  for (std::uint32_t v = 0; v < n; ++v)
    (side[v] == 0 ? result.side_a : result.side_b).push_back(v);
  return result;
}

std::uint64_t gp_cost(const Bisection& bisection, const InteractionGraph& graph) {
  std::vector<std::uint8_t> side(graph.num_nodes, 0);
  for (QubitId v : bisection.side_b) side[v] = 1;
  std::uint64_t cut = 0;
  for (const auto& [pair, weight] : graph.edges)
    if (side[pair.first] != side[pair.second]) cut += weight;
  return cut;
}

std::string graph_to_edge_list(const InteractionGraph& graph) {
  std::ostringstream out;
  for (const auto& [pair, weight] : graph.edges)
    out << pair.first << ' ' << pair.second << ' ' << weight << '\n';
  return out.str();
}

} // namespace dqc
