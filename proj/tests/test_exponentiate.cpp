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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "psyn/exponentiate.hpp"
#include "psyn/oracle.hpp"
#include "psyn/rng.hpp"
#include "psyn/sample.hpp"

namespace psyn {
namespace {

using oracle::DenseUnitary;

DiagonalTerm dterm(const std::string& mask, double angle, bool sign = false) {
  Bits b(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) b.set(i, mask[i] == 'Z');
  return DiagonalTerm(b, sign, angle);
}

// The qubits-only block of a circuit with the ancilla in and out of |0>.
DenseUnitary ancilla_zero_block(const Circuit& c, std::size_t n) {
  const DenseUnitary u = oracle::circuit_to_unitary(c);
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index stride = u.rows() / dim;
  DenseUnitary block(dim, dim);
  double leak = 0.0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c2 = 0; c2 < dim; ++c2) {
      block(r, c2) = u(stride * r, stride * c2);
      for (Eigen::Index s = 1; s < stride; ++s) {
        leak = std::max(leak, std::abs(u(stride * r + s, stride * c2)));
      }
    }
  }
  EXPECT_LT(leak, 1e-10) << "ancilla not returned to |0>";
  return block;
}

std::size_t cx_count(const Circuit& c) {
  std::size_t n = 0;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CX) ++n;
  }
  return n;
}

TEST(Exponentiate, LadderCountMatchesTransitionFormula) {
  const std::vector<DiagonalTerm> ordered = {
      dterm("IZI", 0.1), dterm("IZZ", 0.2), dterm("ZZI", 0.3)};
  const Circuit c = build_exponentiation_circuit(ordered, 3);
  EXPECT_EQ(cx_count(c), exp_cx_cost(ordered));
  EXPECT_EQ(cx_count(c), 6u);
  std::size_t rz = 0;
  for (const Gate& g : c.gates) rz += g.kind == GateKind::RZ;
  EXPECT_EQ(rz, 3u);
  EXPECT_EQ(c.n_qubits, 4u);
}

TEST(Exponentiate, EmptyTermList) {
  const Circuit c = build_exponentiation_circuit({}, 3);
  EXPECT_TRUE(c.gates.empty());
}

TEST(Exponentiate, LadderUnitaryMatchesEvolution) {
  const double theta = 0.6;
  const Circuit c =
      build_exponentiation_circuit({dterm("ZIZ", theta, true)}, 3);
  const DenseUnitary got = ancilla_zero_block(c, 3);
  // sign folded into the angle: exp(-i theta M(ZIZ))
  const DenseUnitary expect =
      oracle::exact_evolution({PauliTerm("ZIZ", -theta)});
  EXPECT_LT((got - expect).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Exponentiate, IdentityMaskBecomesGlobalPhase) {
  const Circuit c = build_exponentiation_circuit({dterm("III", 0.7)}, 3);
  EXPECT_TRUE(c.gates.empty());
  EXPECT_DOUBLE_EQ(c.global_phase, 0.7);
  const Circuit neg = build_exponentiation_circuit({dterm("III", 0.7, true)}, 3);
  EXPECT_DOUBLE_EQ(neg.global_phase, -0.7);
}

TEST(Exponentiate, RandomLadderCountsEqualFormula) {
  Rng rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    Rng child = rng.stream(trial);
    const std::size_t n = 1 + child.below(7);
    const std::size_t m = 1 + child.below(10);
    std::vector<DiagonalTerm> ts;
    for (std::size_t i = 0; i < m; ++i) {
      Bits mask(n);
      for (std::size_t q = 0; q < n; ++q) mask.set(q, child.coin());
      ts.emplace_back(mask, child.coin(), child.real());
    }
    const Circuit c = build_exponentiation_circuit(ts, n);
    EXPECT_EQ(cx_count(c), exp_cx_cost(ts));
    EXPECT_EQ(c.exp_cx, exp_cx_cost(ts));
  }
}

TEST(Simulation, PaperInstanceMatchesOracle) {
  const std::vector<PauliTerm> terms = {
      PauliTerm("IXX", 0.1), PauliTerm("ZYZ", 0.2), PauliTerm("XXI", 0.3)};
  const DenseUnitary expect = oracle::exact_evolution(terms);
  for (DiagMethod m :
       {DiagMethod::CZ, DiagMethod::CNot, DiagMethod::Greedy2}) {
    const Circuit c =
        build_simulation_circuit(terms, m, OrderingStrategy::opt());
    const DenseUnitary got = ancilla_zero_block(c, 3);
    EXPECT_LT(oracle::deviation_up_to_global_phase(got, expect), 1e-9)
        << diag_method_name(m);
  }
}

TEST(Simulation, PaperInstanceBestMethodTotalsTenCx) {
  const std::vector<PauliTerm> terms = {
      PauliTerm("IXX", 0.1), PauliTerm("ZYZ", 0.2), PauliTerm("XXI", 0.3)};
  std::size_t best = SIZE_MAX;
  for (DiagMethod m :
       {DiagMethod::CZ, DiagMethod::CNot, DiagMethod::CNotLog2,
        DiagMethod::CNotBest, DiagMethod::Greedy1, DiagMethod::Greedy2}) {
    const Circuit c =
        build_simulation_circuit(terms, m, OrderingStrategy::opt());
    best = std::min(best, circuit_stats(c).cnot_count);
  }
  EXPECT_EQ(best, 10u);
}

TEST(Simulation, EmptySetGivesIdentityCircuit) {
  const Circuit c = build_simulation_circuit({}, DiagMethod::CZ,
                                             OrderingStrategy::opt());
  EXPECT_EQ(c.n_qubits, 0u);
  EXPECT_TRUE(c.gates.empty());
}

TEST(Direct, SingleZzTerm) {
  const Circuit c =
      build_direct_circuit({PauliTerm("ZZ", 0.4)}, OrderingStrategy::opt());
  ASSERT_EQ(c.gates.size(), 5u);
  EXPECT_EQ(c.gates[0].kind, GateKind::CX);
  EXPECT_EQ(c.gates[1].kind, GateKind::CX);
  EXPECT_EQ(c.gates[2].kind, GateKind::RZ);
  EXPECT_EQ(c.gates[3].kind, GateKind::CX);
  EXPECT_EQ(c.gates[4].kind, GateKind::CX);
}

TEST(Direct, SingleYTermGatesAndOracle) {
  const double theta = 0.9;
  const Circuit c =
      build_direct_circuit({PauliTerm("Y", theta)}, OrderingStrategy::opt());
  const std::vector<GateKind> kinds = {GateKind::S,  GateKind::H,
                                       GateKind::CX, GateKind::RZ,
                                       GateKind::CX, GateKind::H,
                                       GateKind::Sdg};
  ASSERT_EQ(c.gates.size(), kinds.size());
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    EXPECT_EQ(c.gates[i].kind, kinds[i]);
  }
  EXPECT_DOUBLE_EQ(c.gates[3].angle, -theta);  // angle negated per Y
  const DenseUnitary got = ancilla_zero_block(c, 1);
  const DenseUnitary expect = oracle::exact_evolution({PauliTerm("Y", theta)});
  EXPECT_LT((got - expect).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Direct, PaperInstanceTwelveCxAfterOptimization) {
  const std::vector<PauliTerm> terms = {
      PauliTerm("IXX", 0.1), PauliTerm("ZYZ", 0.2), PauliTerm("XXI", 0.3)};
  const Circuit c = build_direct_circuit(terms, OrderingStrategy::opt());
  EXPECT_EQ(circuit_stats(c).cnot_count, 12u);
  const DenseUnitary got = ancilla_zero_block(c, 3);
  const DenseUnitary expect = oracle::exact_evolution(terms);
  EXPECT_LT(oracle::deviation_up_to_global_phase(got, expect), 1e-9);
}

TEST(Direct, UnoptimizedPaperInstanceFourteenCx) {
  const std::vector<PauliTerm> terms = {
      PauliTerm("IXX", 0.1), PauliTerm("ZYZ", 0.2), PauliTerm("XXI", 0.3)};
  const Circuit c = build_direct_circuit(terms, OrderingStrategy::base());
  EXPECT_EQ(circuit_stats(c).cnot_count, 14u);
}

TEST(Direct, NonCommutingOrderPreserved) {
  const std::vector<PauliTerm> terms = {PauliTerm("XX", 0.3),
                                        PauliTerm("ZI", 0.2)};
  const Circuit c = build_direct_circuit(terms, OrderingStrategy::opt());
  // order matters here; the circuit must implement exp(i t2 ZI) exp(i t1 XX)
  const DenseUnitary got = ancilla_zero_block(c, 2);
  const DenseUnitary expect =
      oracle::exact_evolution({PauliTerm("ZI", 0.2)}) *
      oracle::exact_evolution({PauliTerm("XX", 0.3)});
  EXPECT_LT(oracle::deviation_up_to_global_phase(got, expect), 1e-10);
}

TEST(Direct, RndSingleTrialReproducesOpt) {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    Rng child = rng.stream(trial);
    const std::size_t n = 2 + child.below(3);
    const Tableau gen = sample_generators(n, child);
    std::vector<PauliTerm> terms;
    for (std::size_t i = 0; i < n; ++i) {
      std::string letters = gen.row_string(i);
      if (letters[0] == '-') letters.erase(letters.begin());
      terms.emplace_back(letters, 0.1 * static_cast<double>(i + 1));
    }
    const Circuit opt = build_direct_circuit(terms, OrderingStrategy::opt());
    const Circuit rnd1 =
        build_direct_circuit(terms, OrderingStrategy::rnd(1, 99));
    EXPECT_EQ(opt.gates, rnd1.gates);
  }
}

TEST(Peephole, SpecExamples) {
  Circuit a(1);
  a.add(Gate::h(0));
  a.add(Gate::h(0));
  EXPECT_TRUE(peephole_cancel(a).gates.empty());

  Circuit b(3);
  b.add(Gate::cx(0, 1));
  b.add(Gate::rz(2, 0.4));
  b.add(Gate::cx(0, 1));
  const Circuit rb = peephole_cancel(b);
  ASSERT_EQ(rb.gates.size(), 1u);
  EXPECT_EQ(rb.gates[0].kind, GateKind::RZ);
}

TEST(Peephole, IdempotentAndNeverIncreasesStats) {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    Rng child = rng.stream(trial);
    Circuit c(4);
    for (int g = 0; g < 30; ++g) {
      const std::uint32_t a = static_cast<std::uint32_t>(child.below(4));
      std::uint32_t b = static_cast<std::uint32_t>(child.below(4));
      while (b == a) b = static_cast<std::uint32_t>(child.below(4));
      switch (child.below(5)) {
        case 0:
          c.add(Gate::h(a));
          break;
        case 1:
          c.add(Gate::s(a));
          break;
        case 2:
          c.add(Gate::sdg(a));
          break;
        case 3:
          c.add(Gate::cx(a, b));
          break;
        default:
          c.add(Gate::cz(a, b));
          break;
      }
    }
    const Circuit once = peephole_cancel(c);
    const Circuit twice = peephole_cancel(once);
    EXPECT_EQ(once.gates, twice.gates);
    const CircuitStats s0 = circuit_stats(c);
    const CircuitStats s1 = circuit_stats(once);
    EXPECT_LE(s1.cnot_count, s0.cnot_count);
    EXPECT_LE(s1.single_qubit_count, s0.single_qubit_count);
    EXPECT_LE(s1.depth, s0.depth);
    EXPECT_TRUE(oracle::equal_up_to_global_phase(
        oracle::circuit_to_unitary(c), oracle::circuit_to_unitary(once), 1e-10));
  }
}

TEST(Stats, Examples) {
  const Circuit empty(2);
  const CircuitStats se = circuit_stats(empty);
  EXPECT_EQ(se.cnot_count, 0u);
  EXPECT_EQ(se.single_qubit_count, 0u);
  EXPECT_EQ(se.depth, 0u);

  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::h(1));
  c.add(Gate::cx(0, 1));
  const CircuitStats s = circuit_stats(c);
  EXPECT_EQ(s.depth, 2u);
  EXPECT_EQ(s.cnot_count, 1u);
  EXPECT_EQ(s.single_qubit_count, 2u);
}

TEST(Stats, ControlledRotationCosts) {
  const std::vector<PauliTerm> terms = {PauliTerm("ZZ", 0.4)};
  const Circuit plain = build_direct_circuit(terms, OrderingStrategy::opt());
  const Circuit ctl = build_direct_circuit(terms, OrderingStrategy::opt(), true);
  const CircuitStats sp = circuit_stats(plain);
  const CircuitStats sc = circuit_stats(ctl);
  EXPECT_EQ(sc.cnot_count, sp.cnot_count + 2);
  EXPECT_EQ(sc.single_qubit_count, sp.single_qubit_count + 2 - 1);
}

TEST(Controlled, ControlledCircuitBlockStructure) {
  // Control |0>: identity on the rest; control |1>: the evolution.
  const std::vector<PauliTerm> terms = {PauliTerm("XX", 0.7),
                                        PauliTerm("ZZ", -0.2)};
  const Circuit c = build_simulation_circuit(
      terms, DiagMethod::CZ, OrderingStrategy::opt(), {}, true);
  ASSERT_EQ(c.n_qubits, 4u);  // 2 system + ancilla + control
  const DenseUnitary u = oracle::circuit_to_unitary(c);
  const DenseUnitary expect = oracle::exact_evolution(terms);
  // index layout: (q0 q1 anc ctl), so ctl is the least significant bit
  const Eigen::Index dim = 4;
  DenseUnitary on(dim, dim), off(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index cc = 0; cc < dim; ++cc) {
      off(r, cc) = u(4 * r, 4 * cc);      // anc=0, ctl=0
      on(r, cc) = u(4 * r + 1, 4 * cc + 1);  // anc=0, ctl=1
    }
  }
  EXPECT_LT((off - DenseUnitary::Identity(dim, dim)).cwiseAbs().maxCoeff(),
            1e-10);
  EXPECT_LT((on - expect).cwiseAbs().maxCoeff(), 1e-9);
}

}  // namespace
}  // namespace psyn
