// Copyright psyn contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "psyn/circuit.hpp"
#include "psyn/common.hpp"
#include "psyn/exponentiate.hpp"
#include "psyn/hamiltonian.hpp"
#include "psyn/partition.hpp"
#include "psyn/qasm.hpp"

namespace psyn {

inline constexpr int kReportSchemaVersion = 1;

struct RunOptions {
  PartitionStrategy partition = PartitionStrategy::Sequential;
  std::optional<DiagMethod> method;  // empty = auto (best of cz/greedy2/direct)
  bool direct = false;               // force the direct method
  OrderingStrategy ordering = OrderingStrategy::opt();
  DiagOptions diag;
  bool controlled = false;
  std::string qasm_out;  // path prefix; empty = do not write
  std::string json_out;  // path; empty = do not write
};

struct PartitionResult {
  std::size_t index = 0;
  std::size_t size = 0;
  std::string method;
  CircuitStats stats;
};

struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::string source;
  std::size_t n_qubits = 0;
  std::size_t n_terms = 0;
  std::string partition_strategy;
  std::size_t partition_count = 0;
  double partition_median_size = 0.0;
  std::size_t partition_max_size = 0;
  std::string method;
  std::string ordering;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<PartitionResult> partitions;
  // Aggregate counts are sums; the total depth is the sum of the
  // per-partition depths.
  CircuitStats aggregate;
};

namespace detail {

inline std::vector<PauliTerm> gather(const std::vector<PauliTerm>& terms,
                                     const std::vector<std::size_t>& idx) {
  std::vector<PauliTerm> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(terms[i]);
  return out;
}

struct SynthesizedSet {
  Circuit circuit;
  std::string method;
};

inline SynthesizedSet synthesize_set(const std::vector<PauliTerm>& terms,
                                     const RunOptions& opt) {
  if (opt.direct) {
    return {build_direct_circuit(terms, opt.ordering, opt.controlled),
            "direct"};
  }
  if (opt.method.has_value()) {
    return {build_simulation_circuit(terms, *opt.method, opt.ordering,
                                     opt.diag, opt.controlled),
            diag_method_name(*opt.method)};
  }
  // Automatic per-set choice: fewest two-qubit gates among the cz and
  // greedy-2 diagonalization routes and direct exponentiation, preferring
  // the earlier candidate on ties.
  SynthesizedSet best;
  std::size_t best_cx = 0;
  bool first = true;
  const auto consider = [&](Circuit c, const std::string& name) {
    const std::size_t cx = circuit_stats(c).cnot_count;
    if (first || cx < best_cx) {
      best = {std::move(c), name};
      best_cx = cx;
      first = false;
    }
  };
  consider(build_simulation_circuit(terms, DiagMethod::CZ, opt.ordering,
                                    opt.diag, opt.controlled),
           "cz");
  consider(build_simulation_circuit(terms, DiagMethod::Greedy2, opt.ordering,
                                    opt.diag, opt.controlled),
           "greedy2");
  consider(build_direct_circuit(terms, opt.ordering, opt.controlled),
           "direct");
  return best;
}

}  // namespace detail

inline RunReport run_pipeline(const HamiltonianFile& h, const RunOptions& opt,
                              std::vector<Circuit>* circuits_out = nullptr) {
  RunReport report;
  report.source = h.source;
  report.n_qubits = h.n;
  report.n_terms = h.terms.size();
  report.partition_strategy = partition_strategy_name(opt.partition);
  report.method = opt.direct
                      ? "direct"
                      : (opt.method ? diag_method_name(*opt.method) : "auto");
  report.ordering = ordering_kind_name(opt.ordering.kind);
  report.trials =
      opt.ordering.kind == OrderingStrategy::Kind::Rnd ? opt.ordering.trials : 0;
  report.seed = opt.ordering.seed;

  if (h.terms.empty()) return report;

  const Partition partition = make_partition(h.terms, opt.partition);
  report.partition_count = partition.sets.size();
  std::vector<std::size_t> sizes;
  for (const auto& set : partition.sets) sizes.push_back(set.size());
  std::sort(sizes.begin(), sizes.end());
  report.partition_max_size = sizes.back();
  const std::size_t mid = sizes.size() / 2;
  report.partition_median_size =
      sizes.size() % 2 == 1
          ? static_cast<double>(sizes[mid])
          : (static_cast<double>(sizes[mid - 1] + sizes[mid]) / 2.0);

  RunOptions per_set = opt;
  for (std::size_t p = 0; p < partition.sets.size(); ++p) {
    // Independent, reproducible ordering stream per partition.
    per_set.ordering.seed = Rng(opt.ordering.seed).stream(p).seed();
    const std::vector<PauliTerm> terms = detail::gather(h.terms, partition.sets[p]);
    detail::SynthesizedSet synth;
    try {
      synth = detail::synthesize_set(terms, per_set);
    } catch (const data_error& e) {
      throw data_error("partition " + std::to_string(p) + ": " + e.what());
    }

    PartitionResult pr;
    pr.index = p;
    pr.size = terms.size();
    pr.method = synth.method;
    pr.stats = circuit_stats(synth.circuit);
    report.aggregate.cnot_count += pr.stats.cnot_count;
    report.aggregate.single_qubit_count += pr.stats.single_qubit_count;
    report.aggregate.depth += pr.stats.depth;
    report.aggregate.cnot_exp += pr.stats.cnot_exp;
    report.aggregate.cz_count += pr.stats.cz_count;
    report.partitions.push_back(pr);

    if (!opt.qasm_out.empty()) {
      char suffix[32];
      std::snprintf(suffix, sizeof(suffix), "p%03zu.qasm", p);
      std::ofstream f(opt.qasm_out + suffix, std::ios::binary);
      if (!f) throw data_error("cannot write " + opt.qasm_out + suffix);
      f << emit_qasm(synth.circuit);
    }
    if (circuits_out != nullptr) circuits_out->push_back(std::move(synth.circuit));
  }
  return report;
}

inline nlohmann::json stats_to_json(const CircuitStats& s) {
  return nlohmann::json{{"cnot", s.cnot_count},
                        {"single_qubit", s.single_qubit_count},
                        {"depth", s.depth},
                        {"cnot_exp", s.cnot_exp},
                        {"cz", s.cz_count}};
}

inline nlohmann::json report_to_json(const RunReport& r) {
  nlohmann::json parts = nlohmann::json::array();
  for (const PartitionResult& p : r.partitions) {
    parts.push_back(nlohmann::json{{"index", p.index},
                                   {"size", p.size},
                                   {"method", p.method},
                                   {"stats", stats_to_json(p.stats)}});
  }
  return nlohmann::json{
      {"schema_version", r.schema_version},
      {"input", nlohmann::json{{"source", r.source},
                               {"qubits", r.n_qubits},
                               {"terms", r.n_terms}}},
      {"partition", nlohmann::json{{"strategy", r.partition_strategy},
                                   {"count", r.partition_count},
                                   {"median_size", r.partition_median_size},
                                   {"max_size", r.partition_max_size}}},
      {"method", r.method},
      {"ordering",
       nlohmann::json{{"kind", r.ordering}, {"trials", r.trials}, {"seed", r.seed}}},
      {"partitions", parts},
      {"aggregate", stats_to_json(r.aggregate)}};
}

inline void write_report(const RunReport& r, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw data_error("cannot write " + path);
  f << report_to_json(r).dump(2) << "\n";
}

}  // namespace psyn
