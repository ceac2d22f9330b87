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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "psyn/diagonalize.hpp"
#include "psyn/exponentiate.hpp"
#include "psyn/hamiltonian.hpp"
#include "psyn/oracle.hpp"
#include "psyn/partition.hpp"
#include "psyn/pipeline.hpp"
#include "psyn/qasm.hpp"
#include "psyn/sample.hpp"

namespace {

using nlohmann::json;

struct CommonFlags {
  std::string method = "auto";
  std::string partition = "sequential";
  std::string order = "opt";
  int trials = 100;
  std::uint64_t seed = 0;
  std::string qasm_out;
  std::string json_out;
  std::size_t block_size = 0;
};

void add_synthesis_flags(CLI::App* cmd, CommonFlags& f, bool with_method = true) {
  if (with_method) {
    cmd->add_option("--method", f.method,
                    "cz|cnot|cnot-log2|cnot-best|greedy1|greedy2|direct|auto");
  }
  cmd->add_option("--partition", f.partition,
                  "sequential|largest-first|independent-set");
  cmd->add_option("--order", f.order, "base|opt|rnd");
  cmd->add_option("--trials", f.trials, "random orderings tried with --order rnd");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--qasm-out", f.qasm_out, "path prefix for emitted QASM files");
  cmd->add_option("--json-out", f.json_out, "path for the JSON report");
  cmd->add_option("--block-size", f.block_size,
                  "section width for cnot-log2 re-synthesis (0 = log2)");
}

psyn::OrderingStrategy make_ordering(const CommonFlags& f) {
  psyn::OrderingStrategy s;
  if (f.order == "base") {
    s.kind = psyn::OrderingStrategy::Kind::Base;
  } else if (f.order == "opt") {
    s.kind = psyn::OrderingStrategy::Kind::Opt;
  } else if (f.order == "rnd") {
    s.kind = psyn::OrderingStrategy::Kind::Rnd;
  } else {
    throw psyn::data_error("unknown ordering strategy: " + f.order);
  }
  s.trials = f.trials;
  s.seed = f.seed;
  return s;
}

psyn::RunOptions make_options(const CommonFlags& f) {
  psyn::RunOptions opt;
  opt.partition = psyn::partition_strategy_from_name(f.partition);
  if (f.method == "direct") {
    opt.direct = true;
  } else if (f.method != "auto") {
    opt.method = psyn::diag_method_from_name(f.method);
  }
  opt.ordering = make_ordering(f);
  opt.diag.block_size = f.block_size;
  opt.qasm_out = f.qasm_out;
  opt.json_out = f.json_out;
  return opt;
}

void emit_report(const psyn::RunReport& report, const std::string& json_out) {
  const json j = psyn::report_to_json(report);
  if (!json_out.empty()) {
    psyn::write_report(report, json_out);
  }
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-cluster time-evolution circuit synthesis"};
  app.require_subcommand(1);

  std::string file;
  CommonFlags flags;
  std::size_t sample_qubits = 0;
  std::size_t sample_terms = 0;
  std::string out_path;

  auto* partition_cmd = app.add_subcommand("partition", "split a Hamiltonian into commuting sets");
  partition_cmd->add_option("file", file)->required();
  add_synthesis_flags(partition_cmd, flags, false);

  auto* diag_cmd = app.add_subcommand("diagonalize", "emit the diagonalization circuit of a commuting set");
  diag_cmd->add_option("file", file)->required();
  add_synthesis_flags(diag_cmd, flags);

  auto* sim_cmd = app.add_subcommand("simulate", "synthesize time-evolution circuits per commuting partition");
  sim_cmd->add_option("file", file)->required();
  add_synthesis_flags(sim_cmd, flags);

  auto* direct_cmd = app.add_subcommand("direct", "synthesize with per-term exponentiation only");
  direct_cmd->add_option("file", file)->required();
  add_synthesis_flags(direct_cmd, flags, false);

  auto* sample_cmd = app.add_subcommand("sample", "sample random commuting Pauli sets");
  sample_cmd->add_option("--qubits", sample_qubits)->required();
  sample_cmd->add_option("--terms", sample_terms, "compose this many rows from the generators");
  sample_cmd->add_option("--seed", flags.seed);
  sample_cmd->add_option("--out", out_path, "write in Hamiltonian format (default stdout)");

  auto* normalize_cmd = app.add_subcommand("normalize", "canonical form of a full-rank commuting set");
  normalize_cmd->add_option("file", file)->required();
  normalize_cmd->add_option("--json-out", flags.json_out);

  auto* verify_cmd = app.add_subcommand("verify", "dense-matrix check of synthesized circuits");
  verify_cmd->add_option("file", file)->required();
  add_synthesis_flags(verify_cmd, flags);

  auto* stats_cmd = app.add_subcommand("stats", "report circuit statistics without writing circuits");
  stats_cmd->add_option("file", file)->required();
  add_synthesis_flags(stats_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (partition_cmd->parsed()) {
      const psyn::HamiltonianFile h = psyn::load_hamiltonian(file);
      const psyn::Partition p = psyn::make_partition(
          h.terms, psyn::partition_strategy_from_name(flags.partition));
      json sets = json::array();
      for (const auto& s : p.sets) sets.push_back(s);
      json j{{"strategy", psyn::partition_strategy_name(p.strategy)},
             {"count", p.sets.size()},
             {"sets", sets}};
      if (!flags.json_out.empty()) {
        std::ofstream f(flags.json_out, std::ios::binary);
        if (!f) throw psyn::data_error("cannot write " + flags.json_out);
        f << j.dump(2) << "\n";
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (diag_cmd->parsed()) {
      const psyn::HamiltonianFile h = psyn::load_hamiltonian(file);
      const std::string method = flags.method == "auto" ? "cz" : flags.method;
      psyn::DiagOptions dopt;
      dopt.block_size = flags.block_size;
      const psyn::DiagResult dr = psyn::diagonalize(
          h.terms, psyn::diag_method_from_name(method), dopt);
      json diag = json::array();
      for (const auto& d : dr.diag) {
        diag.push_back(json{{"pauli", std::string(d.sign ? "-" : "") + d.letters()},
                            {"angle", d.angle}});
      }
      const psyn::CircuitStats st = psyn::circuit_stats(dr.circuit);
      json j{{"method", method},
             {"rank", dr.rank},
             {"stats", psyn::stats_to_json(st)},
             {"diagonal", diag}};
      if (!flags.qasm_out.empty()) {
        std::ofstream f(flags.qasm_out, std::ios::binary);
        if (!f) throw psyn::data_error("cannot write " + flags.qasm_out);
        f << psyn::emit_qasm(dr.circuit);
      }
      if (!flags.json_out.empty()) {
        std::ofstream f(flags.json_out, std::ios::binary);
        if (!f) throw psyn::data_error("cannot write " + flags.json_out);
        f << j.dump(2) << "\n";
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (sim_cmd->parsed() || direct_cmd->parsed() || stats_cmd->parsed()) {
      const psyn::HamiltonianFile h = psyn::load_hamiltonian(file);
      psyn::RunOptions opt = make_options(flags);
      if (direct_cmd->parsed()) {
        opt.direct = true;
        opt.method.reset();
      }
      if (stats_cmd->parsed()) opt.qasm_out.clear();
      const psyn::RunReport report = psyn::run_pipeline(h, opt);
      emit_report(report, flags.json_out);
      return 0;
    }

    if (sample_cmd->parsed()) {
      psyn::Rng rng(flags.seed);
      psyn::Tableau t = psyn::sample_generators(sample_qubits, rng);
      if (sample_terms > 0) {
        const psyn::FullRankSample b = psyn::sample_full_rank_binary(
            sample_terms, sample_qubits, rng);
        t = psyn::compose_basis(t, b.matrix);
        psyn::randomize_signs(t, rng);
      }
      std::string text;
      text += "# seed: " + std::to_string(flags.seed) + "\n";
      for (std::size_t i = 0; i < t.rows(); ++i) {
        text += "1.0 " + t.row_string(i) + "\n";
      }
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw psyn::data_error("cannot write " + out_path);
        f << text;
      } else {
        std::cout << text;
      }
      return 0;
    }

    if (normalize_cmd->parsed()) {
      const psyn::HamiltonianFile h = psyn::load_hamiltonian(file);
      psyn::Tableau t = psyn::Tableau::from_terms(h.terms);
      for (std::size_t i = 0; i < h.terms.size(); ++i) {
        t.set_sign(i, h.terms[i].coeff < 0);
      }
      const psyn::CanonicalForm form = psyn::normalize_full_rank(t);
      json zrows = json::array();
      for (std::size_t i = 0; i < form.z.rows(); ++i) {
        zrows.push_back(form.z.row(i).to_string());
      }
      json j{{"z", zrows},
             {"hadamard_set", form.hadamard_set},
             {"signs", form.signs.to_string()}};
      if (!flags.json_out.empty()) {
        std::ofstream f(flags.json_out, std::ios::binary);
        if (!f) throw psyn::data_error("cannot write " + flags.json_out);
        f << j.dump(2) << "\n";
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      const psyn::HamiltonianFile h = psyn::load_hamiltonian(file);
      if (h.n + 1 > psyn::oracle::kMaxDenseQubits) {
        throw psyn::data_error("verify supports at most 11 qubits");
      }
      psyn::RunOptions opt = make_options(flags);
      opt.qasm_out.clear();
      std::vector<psyn::Circuit> circuits;
      const psyn::RunReport report = psyn::run_pipeline(h, opt, &circuits);
      const psyn::Partition parts = psyn::make_partition(h.terms, opt.partition);
      bool all_ok = true;
      json results = json::array();
      for (std::size_t p = 0; p < circuits.size(); ++p) {
        std::vector<psyn::PauliTerm> terms;
        for (std::size_t idx : parts.sets[p]) terms.push_back(h.terms[idx]);
        const auto u = psyn::oracle::circuit_to_unitary(circuits[p]);
        const auto target = psyn::oracle::exact_evolution(terms);
        // Ancilla in and out |0>: compare the even-index block.
        const Eigen::Index dim = target.rows();
        psyn::oracle::DenseUnitary block(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
          for (Eigen::Index c = 0; c < dim; ++c) block(r, c) = u(2 * r, 2 * c);
        }
        const double dev = psyn::oracle::deviation_up_to_global_phase(block, target);
        const bool ok = dev < 1e-9;
        all_ok = all_ok && ok;
        results.push_back(json{{"partition", p}, {"deviation", dev}, {"ok", ok}});
        std::cout << "partition " << p << ": " << (ok ? "PASS" : "FAIL")
                  << " (max deviation " << dev << ")\n";
      }
      json j{{"ok", all_ok}, {"results", results},
             {"report", psyn::report_to_json(report)}};
      if (!flags.json_out.empty()) {
        std::ofstream f(flags.json_out, std::ios::binary);
        if (!f) throw psyn::data_error("cannot write " + flags.json_out);
        f << j.dump(2) << "\n";
      }
      return all_ok ? 0 : 3;
    }
  } catch (const psyn::data_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
