#include "dqc/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dqc/baseline.hpp"
#include "dqc/errors.hpp"
#include "dqc/qasm.hpp"
#include "dqc/qft.hpp"

namespace dqc {

CircuitSource CircuitSource::from_file(std::string path) {
  CircuitSource source;
  source.kind = Kind::QasmFile;
  source.qasm_path = std::move(path);
  return source;
}

CircuitSource CircuitSource::from_random(RandomCircuitSpec spec) {
  CircuitSource source;
  source.kind = Kind::Random;
  source.random_spec = spec;
  return source;
}

CircuitSource CircuitSource::from_qft(std::uint32_t num_qubits) {
  CircuitSource source;
  source.kind = Kind::Qft;
  source.qft_qubits = num_qubits;
  return source;
}

Circuit CircuitSource::resolve() const {
  switch (kind) {
    case Kind::QasmFile: {
      std::ifstream in(qasm_path);
      if (!in) throw error("cannot open circuit file '" + qasm_path + "'");
      std::ostringstream text;
      text << in.rdbuf();
      std::string stem = qasm_path;
      if (auto pos = stem.find_last_of('/'); pos != std::string::npos)
        stem = stem.substr(pos + 1);
      if (auto pos = stem.rfind(".qasm"); pos != std::string::npos)
        stem = stem.substr(0, pos);
      return parse_qasm(text.str(), stem);
    }
    case Kind::Random:
      return generate_random_circuit(random_spec);
    case Kind::Qft:
      return make_qft_circuit(qft_qubits);
  }
  throw error("unreachable circuit source kind");
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  if (spec.num_seeds < 1) throw structural_error("num_seeds must be >= 1");
  const Circuit circuit = spec.source.resolve();
  spec.network.validate(circuit.num_qubits);

  ExperimentReport report;
  report.circuit_name = circuit.name;
  report.num_qubits = circuit.num_qubits;
  report.depth = static_cast<std::uint32_t>(circuit.depth());
  report.capacities = spec.network.capacities;
  report.seed_base = spec.seed_base;

  for (std::uint32_t s = 0; s < spec.num_seeds; ++s) {
    EaConfig config = spec.ea;
    config.master_seed = spec.seed_base + s;
    EaResult run = run_ea(circuit, spec.network, config);
    report.ea_totals.push_back(run.best.cached_cost.total);
    report.ea_wall_times.push_back(run.wall_time);
  }
  double sum = 0;
  for (std::uint64_t total : report.ea_totals)
    sum += static_cast<double>(total);
  report.ea_mean = sum / static_cast<double>(report.ea_totals.size());

  const auto gp_start = std::chrono::steady_clock::now();
  const InteractionGraph graph = build_interaction_graph(circuit);
  report.gp_total =
      gp_cost(kernighan_lin(graph, spec.seed_base), graph);
  report.gp_wall_time = std::chrono::steady_clock::now() - gp_start;
  return report;
}

namespace {

std::string format_mean(double mean) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", mean);
  return buf;
}

std::string join_u64(const std::vector<std::uint64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join_u32(const std::vector<std::uint32_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

} // namespace

std::string emit_report(const std::vector<ExperimentReport>& reports,
                        ReportFormat format) {
  std::string out;
  if (format == ReportFormat::Csv) {
    out += "circuit,qubits,depth,ea_mean,gp_result,ea_totals,capacities,seed_base\n";
    for (const ExperimentReport& r : reports) {
      out += r.circuit_name + ',' + std::to_string(r.num_qubits) + ',' +
             std::to_string(r.depth) + ',' + format_mean(r.ea_mean) + ',' +
             std::to_string(r.gp_total) + ',' + join_u64(r.ea_totals, ';') +
             ',' + join_u32(r.capacities, ';') + ',' +
             std::to_string(r.seed_base) + '\n';
    }
  } else {
    out += "| Circuit | Qubits | Depth | EA result | GP result |\n";
    out += "|---------|--------|-------|-----------|-----------|\n";
    for (const ExperimentReport& r : reports) {
      out += "| " + r.circuit_name + " | " + std::to_string(r.num_qubits) +
             " | " + std::to_string(r.depth) + " | " + format_mean(r.ea_mean) +
             " | " + std::to_string(r.gp_total) + " |\n";
    }
  }
  return out;
}

std::vector<ExperimentReport> sweep(const std::vector<ExperimentSpec>& suite) {
  std::vector<ExperimentReport> reports;
  reports.reserve(suite.size());
  for (const ExperimentSpec& spec : suite)
    reports.push_back(run_experiment(spec));
  return reports;
}

std::vector<ExperimentSpec> paper_suite(std::uint32_t num_seeds,
                                        std::uint64_t seed_base,
                                        const EaConfig& ea) {
  std::vector<ExperimentSpec> suite;
  for (std::uint32_t n : {4u, 8u}) {
    for (std::uint32_t depth : {10u, 20u, 30u, 40u, 50u}) {
      RandomCircuitSpec random;
      random.num_qubits = n;
      random.target_depth = depth;
      random.seed = static_cast<std::uint64_t>(n) * 1000 + depth;
      ExperimentSpec spec;
      spec.source = CircuitSource::from_random(random);
      spec.network = NetworkSpec::equal_split(n, 2);
      spec.ea = ea;
      spec.num_seeds = num_seeds;
      spec.seed_base = seed_base;
      suite.push_back(std::move(spec));
    }
  }
  for (std::uint32_t n : {4u, 8u, 16u, 32u, 50u}) {
    ExperimentSpec spec;
    spec.source = CircuitSource::from_qft(n);
    spec.network = NetworkSpec::equal_split(n, 2);
    spec.ea = ea;
    spec.num_seeds = num_seeds;
    spec.seed_base = seed_base;
    suite.push_back(std::move(spec));
  }
  return suite;
}

} // namespace dqc
