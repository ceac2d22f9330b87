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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "psyn/circuit.hpp"
#include "psyn/common.hpp"
#include "psyn/diagonal_term.hpp"
#include "psyn/pauli.hpp"
#include "psyn/tableau.hpp"

// Dense-matrix brute-force reference for desk-scale verification. Correctness
// beats speed here: every routine is a direct transcription of the defining
// linear algebra. Qubit 0 is the most significant tensor factor.

namespace psyn::oracle {

using DenseUnitary = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDenseQubits = 12;

inline void check_qubit_cap(std::size_t n) {
  if (n > kMaxDenseQubits) {
    throw data_error("dense oracle supports at most 12 qubits");
  }
}

inline Eigen::Matrix2cd pauli_letter_matrix(char letter) {
  Eigen::Matrix2cd m;
  const Complex i(0.0, 1.0);
  switch (letter) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -i, i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw data_error("invalid Pauli letter");
  }
  return m;
}

// Tensor product of the letters, times (-1)^negative.
inline DenseUnitary pauli_string_matrix(const std::string& letters,
                                        bool negative = false) {
  check_qubit_cap(letters.size());
  DenseUnitary acc = DenseUnitary::Identity(1, 1);
  for (char c : letters) {
    const Eigen::Matrix2cd p = pauli_letter_matrix(c);
    DenseUnitary next(acc.rows() * 2, acc.cols() * 2);
    next.block(0, 0, acc.rows(), acc.cols()) = p(0, 0) * acc;
    next.block(0, acc.cols(), acc.rows(), acc.cols()) = p(0, 1) * acc;
    next.block(acc.rows(), 0, acc.rows(), acc.cols()) = p(1, 0) * acc;
    next.block(acc.rows(), acc.cols(), acc.rows(), acc.cols()) = p(1, 1) * acc;
    acc = std::move(next);
  }
  if (negative) acc = -acc;
  return acc;
}

inline DenseUnitary pauli_to_matrix(const PauliTerm& term) {
  return pauli_string_matrix(term.letters, false);
}

inline DenseUnitary pauli_to_matrix(const Tableau& t, std::size_t row) {
  std::string letters;
  for (std::size_t j = 0; j < t.qubits(); ++j) {
    letters.push_back(PauliTerm::letter_from_bits(t.x(row, j), t.z(row, j)));
  }
  return pauli_string_matrix(letters, t.sign(row));
}

namespace detail {

// Applies G (as a left factor) to the rows of U in place.
inline void apply_single(DenseUnitary& u, std::size_t n, std::uint32_t q,
                         const Eigen::Matrix2cd& g) {
  const std::size_t dim = u.rows();
  const std::size_t bit = std::size_t{1} << (n - 1 - q);
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & bit) continue;
    const std::size_t r1 = r | bit;
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex a = u(r, c), b = u(r1, c);
      u(r, c) = g(0, 0) * a + g(0, 1) * b;
      u(r1, c) = g(1, 0) * a + g(1, 1) * b;
    }
  }
}

inline void apply_gate_dense(DenseUnitary& u, std::size_t n, const Gate& g) {
  const Complex i(0.0, 1.0);
  const std::size_t dim = u.rows();
  switch (g.kind) {
    case GateKind::H: {
      Eigen::Matrix2cd h;
      h << 1, 1, 1, -1;
      h /= std::sqrt(2.0);
      apply_single(u, n, g.q0, h);
      break;
    }
    case GateKind::S: {
      Eigen::Matrix2cd s;
      s << 1, 0, 0, i;
      apply_single(u, n, g.q0, s);
      break;
    }
    case GateKind::Sdg: {
      Eigen::Matrix2cd s;
      s << 1, 0, 0, -i;
      apply_single(u, n, g.q0, s);
      break;
    }
    case GateKind::X: {
      Eigen::Matrix2cd x;
      x << 0, 1, 1, 0;
      apply_single(u, n, g.q0, x);
      break;
    }
    case GateKind::RZ: {
      // RZ(theta) = diag(e^{i theta}, e^{-i theta})
      Eigen::Matrix2cd rz;
      rz << std::exp(i * g.angle), 0, 0, std::exp(-i * g.angle);
      apply_single(u, n, g.q0, rz);
      break;
    }
    case GateKind::CX: {
      const std::size_t cb = std::size_t{1} << (n - 1 - g.q0);
      const std::size_t tb = std::size_t{1} << (n - 1 - g.q1);
      for (std::size_t r = 0; r < dim; ++r) {
        if ((r & cb) && !(r & tb)) u.row(r).swap(u.row(r | tb));
      }
      break;
    }
    case GateKind::CZ: {
      const std::size_t ab = std::size_t{1} << (n - 1 - g.q0);
      const std::size_t bb = std::size_t{1} << (n - 1 - g.q1);
      for (std::size_t r = 0; r < dim; ++r) {
        if ((r & ab) && (r & bb)) u.row(r) *= -1.0;
      }
      break;
    }
    case GateKind::CRZ: {
      const std::size_t cb = std::size_t{1} << (n - 1 - g.q0);
      const std::size_t tb = std::size_t{1} << (n - 1 - g.q1);
      for (std::size_t r = 0; r < dim; ++r) {
        if (!(r & cb)) continue;
        const double sgn = (r & tb) ? -1.0 : 1.0;
        u.row(r) *= std::exp(i * sgn * g.angle);
      }
      break;
    }
  }
}

}  // namespace detail

// Ordered product of the embedded gate matrices times e^{i * global_phase}.
// Unitarity is checked on construction: exactly for small dimensions and
// against a probe vector above that.
inline DenseUnitary circuit_to_unitary(const Circuit& c) {
  check_qubit_cap(c.n_qubits);
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (const Gate& g : c.gates) detail::apply_gate_dense(u, c.n_qubits, g);
  u *= std::exp(Complex(0.0, c.global_phase));
  if (dim <= 256) {
    const double err =
        (u * u.adjoint() - DenseUnitary::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (err > 1e-10) throw internal_error("circuit unitary check failed");
  } else {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(0) = 1.0;
    v(dim - 1) = Complex(0.0, 1.0);
    v /= std::sqrt(2.0);
    const double err = ((u.adjoint() * (u * v)) - v).cwiseAbs().maxCoeff();
    if (err > 1e-10) throw internal_error("circuit unitary check failed");
  }
  return u;
}

// prod_j exp(i theta_j P_j) for a mutually commuting set; each factor is
// cos(theta) I + i sin(theta) M(P).
inline DenseUnitary exact_evolution(const std::vector<PauliTerm>& terms) {
  std::size_t n = terms.empty() ? 0 : terms.front().num_qubits();
  if (n > kMaxDenseQubits - 1) {
    throw data_error("exact_evolution supports at most 11 qubits");
  }
  const Tableau t = Tableau::from_terms(terms);
  if (!t.mutually_commuting()) {
    throw data_error("exact_evolution requires commuting terms");
  }
  const std::size_t dim = std::size_t{1} << n;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  const Complex i(0.0, 1.0);
  for (const PauliTerm& term : terms) {
    const DenseUnitary m = pauli_to_matrix(term);
    const DenseUnitary factor =
        std::cos(term.coeff) * DenseUnitary::Identity(dim, dim) +
        i * std::sin(term.coeff) * m;
    u = factor * u;
  }
  return u;
}

// Largest deviation max|A - cB| where the unit scalar c is fixed from the
// largest-magnitude entry of B.
inline double deviation_up_to_global_phase(const DenseUnitary& a,
                                           const DenseUnitary& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw data_error("dimension mismatch");
  }
  Eigen::Index br = 0, bc = 0;
  b.cwiseAbs().maxCoeff(&br, &bc);
  if (std::abs(b(br, bc)) == 0.0) return a.cwiseAbs().maxCoeff();
  Complex c = a(br, bc) / b(br, bc);
  const double mag = std::abs(c);
  if (mag == 0.0) return (a - b).cwiseAbs().maxCoeff();
  c /= mag;
  return (a - c * b).cwiseAbs().maxCoeff();
}

inline bool equal_up_to_global_phase(const DenseUnitary& a,
                                     const DenseUnitary& b, double tol) {
  return deviation_up_to_global_phase(a, b) <= tol;
}

inline DenseUnitary pauli_to_matrix(const DiagonalTerm& term) {
  return pauli_string_matrix(term.letters(), term.sign);
}

inline bool is_diagonal(const DenseUnitary& m, double tol) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r != c && std::abs(m(r, c)) > tol) return false;
    }
  }
  return true;
}

// True iff U M(P_j) U^dag is diagonal and equals M(diag_j) exactly (within
// 1e-10) for every row j of the original tableau.
inline bool verify_diagonalization(const Circuit& u_circuit,
                                   const std::vector<DiagonalTerm>& diag,
                                   const Tableau& original) {
  if (original.qubits() > 10) {
    throw data_error("verify_diagonalization supports at most 10 qubits");
  }
  if (diag.size() != original.rows()) return false;
  const DenseUnitary u = circuit_to_unitary(u_circuit);
  const DenseUnitary udag = u.adjoint();
  for (std::size_t j = 0; j < original.rows(); ++j) {
    const DenseUnitary conj = u * pauli_to_matrix(original, j) * udag;
    if (!is_diagonal(conj, 1e-10)) return false;
    const DenseUnitary expect = pauli_to_matrix(diag[j]);
    if ((conj - expect).cwiseAbs().maxCoeff() > 1e-10) return false;
  }
  return true;
}

}  // namespace psyn::oracle
