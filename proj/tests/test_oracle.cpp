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

#include <cmath>
#include <complex>

#include "psyn/oracle.hpp"

namespace psyn {
namespace {

using oracle::Complex;
using oracle::DenseUnitary;

TEST(Oracle, SingleZ) {
  const DenseUnitary z = oracle::pauli_string_matrix("Z");
  EXPECT_EQ(z(0, 0), Complex(1, 0));
  EXPECT_EQ(z(1, 1), Complex(-1, 0));
  EXPECT_EQ(z(0, 1), Complex(0, 0));
}

TEST(Oracle, SignedPauliHermitianInvolutory) {
  const DenseUnitary m = oracle::pauli_string_matrix("ZYXZ", true);
  ASSERT_EQ(m.rows(), 16);
  EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((m * m - DenseUnitary::Identity(16, 16)).cwiseAbs().maxCoeff(),
            1e-14);
}

TEST(Oracle, TableauRowDecoding) {
  const Tableau t = Tableau::from_strings({"XZIY"});
  const DenseUnitary via_row = oracle::pauli_to_matrix(t, 0);
  const DenseUnitary direct = oracle::pauli_string_matrix("XZIY");
  EXPECT_LT((via_row - direct).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Oracle, HadamardMatrix) {
  Circuit c(1);
  c.add(Gate::h(0));
  const DenseUnitary u = oracle::circuit_to_unitary(c);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(u(0, 0).real(), r, 1e-14);
  EXPECT_NEAR(u(0, 1).real(), r, 1e-14);
  EXPECT_NEAR(u(1, 0).real(), r, 1e-14);
  EXPECT_NEAR(u(1, 1).real(), -r, 1e-14);
}

TEST(Oracle, EmptyCircuitIsIdentity) {
  const Circuit c(3);
  const DenseUnitary u = oracle::circuit_to_unitary(c);
  EXPECT_LT((u - DenseUnitary::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-14);
}

// The three-qubit diagonalization circuit built from H on every qubit,
// CX(2,0), CX(2,1), S(2), H(2) maps IXX, ZYZ, XXI to the diagonal group
// {IZI, IZZ, ZZI}.
TEST(Oracle, HandBuiltDiagonalizerConjugation) {
  Circuit c(3);
  c.add(Gate::h(0));
  c.add(Gate::h(1));
  c.add(Gate::h(2));
  c.add(Gate::cx(2, 0));
  c.add(Gate::cx(2, 1));
  c.add(Gate::s(2));
  c.add(Gate::h(2));
  const DenseUnitary u = oracle::circuit_to_unitary(c);

  const auto conj = [&](const std::string& p) {
    return DenseUnitary(u * oracle::pauli_string_matrix(p) * u.adjoint());
  };
  const char* inputs[] = {"IXX", "ZYZ", "XXI"};
  const char* expected[] = {"IZI", "IZZ", "ZZI"};
  for (int i = 0; i < 3; ++i) {
    const DenseUnitary got = conj(inputs[i]);
    EXPECT_TRUE(oracle::is_diagonal(got, 1e-12)) << inputs[i];
    const DenseUnitary plus = oracle::pauli_string_matrix(expected[i]);
    const double dev_plus = (got - plus).cwiseAbs().maxCoeff();
    const double dev_minus = (got + plus).cwiseAbs().maxCoeff();
    EXPECT_LT(std::min(dev_plus, dev_minus), 1e-12) << inputs[i];
  }
}

TEST(Oracle, ExactEvolutionSingleZ) {
  const double theta = 0.37;
  const DenseUnitary u = oracle::exact_evolution({PauliTerm("Z", theta)});
  const Complex i(0, 1);
  EXPECT_LT(std::abs(u(0, 0) - std::exp(i * theta)), 1e-14);
  EXPECT_LT(std::abs(u(1, 1) - std::exp(-i * theta)), 1e-14);
  EXPECT_LT(std::abs(u(0, 1)), 1e-14);
}

TEST(Oracle, ExactEvolutionZeroAnglesIsIdentity) {
  const DenseUnitary u = oracle::exact_evolution(
      {PauliTerm("XY", 0.0), PauliTerm("YX", 0.0)});
  EXPECT_LT((u - DenseUnitary::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Oracle, ExactEvolutionTensorStructure) {
  const double a = 0.3, b = -0.8;
  const DenseUnitary u =
      oracle::exact_evolution({PauliTerm("ZI", a), PauliTerm("IZ", b)});
  Circuit c(2);
  c.add(Gate::rz(0, a));
  c.add(Gate::rz(1, b));
  const DenseUnitary v = oracle::circuit_to_unitary(c);
  EXPECT_LT((u - v).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Oracle, ExactEvolutionRejectsNonCommuting) {
  EXPECT_THROW(
      oracle::exact_evolution({PauliTerm("X", 0.1), PauliTerm("Z", 0.2)}),
      data_error);
}

TEST(Oracle, GlobalPhaseComparison) {
  const DenseUnitary a = oracle::pauli_string_matrix("XY");
  EXPECT_TRUE(oracle::equal_up_to_global_phase(a, -a, 1e-12));
  const Complex i(0, 1);
  EXPECT_TRUE(oracle::equal_up_to_global_phase(a, i * a, 1e-12));

  DenseUnitary id = DenseUnitary::Identity(2, 2);
  DenseUnitary skew = id;
  const double tol = 1e-6;
  skew(1, 1) = 1.0 + 2 * tol;
  EXPECT_FALSE(oracle::equal_up_to_global_phase(id, skew, tol));
}

TEST(Oracle, QubitZeroIsMostSignificant) {
  // X on qubit 0 of two flips the high-order bit.
  Circuit c(2);
  c.add(Gate::x(0));
  const DenseUnitary u = oracle::circuit_to_unitary(c);
  EXPECT_NEAR(std::abs(u(2, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(u(0, 2)), 1.0, 1e-14);
}

TEST(Oracle, SizeCapEnforced) {
  EXPECT_THROW(oracle::pauli_string_matrix(std::string(13, 'Z')), data_error);
}

}  // namespace
}  // namespace psyn
