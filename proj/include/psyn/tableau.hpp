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

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "psyn/bitmat.hpp"
#include "psyn/circuit.hpp"
#include "psyn/common.hpp"
#include "psyn/pauli.hpp"

namespace psyn {

// Binary symplectic tableau [X, Z, s]: one row per Pauli operator, with
// (x, z) = (1,0) -> X, (0,1) -> Z, (1,1) -> Y, (0,0) -> I and a sign bit per
// row (1 means the operator carries a minus sign).
//
// Rows are packed into 64-bit words so sweeps are word-parallel. Qubit swaps
// are recorded in a permutation (work column -> original qubit label) instead
// of emitting gates; circuit emitters translate through it.
class Tableau {
 public:
  Tableau() = default;

  Tableau(std::size_t rows, std::size_t qubits)
      : m_(rows),
        n_(qubits),
        words_((qubits + 63) / 64),
        x_(rows * words_, 0),
        z_(rows * words_, 0),
        sign_(rows, 0),
        label_(qubits) {
    std::iota(label_.begin(), label_.end(), 0u);
  }

  static Tableau from_terms(const std::vector<PauliTerm>& terms) {
    if (terms.empty()) return Tableau();
    const std::size_t n = terms.front().num_qubits();
    Tableau t(terms.size(), n);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].num_qubits() != n) {
        throw data_error("Pauli terms of unequal length");
      }
      for (std::size_t q = 0; q < n; ++q) {
        t.set_x(i, q, terms[i].x_bit(q));
        t.set_z(i, q, terms[i].z_bit(q));
      }
    }
    return t;
  }

  // "ZYXZ" style strings, optionally prefixed with '-'.
  static Tableau from_strings(const std::vector<std::string>& rows) {
    std::vector<PauliTerm> terms;
    std::vector<bool> neg;
    for (const std::string& r : rows) {
      std::string s = r;
      bool negative = false;
      if (!s.empty() && s.front() == '-') {
        negative = true;
        s.erase(s.begin());
      }
      terms.emplace_back(normalize_pauli_letters(s), 1.0);
      neg.push_back(negative);
    }
    Tableau t = from_terms(terms);
    for (std::size_t i = 0; i < neg.size(); ++i) t.set_sign(i, neg[i]);
    return t;
  }

  std::size_t rows() const { return m_; }
  std::size_t qubits() const { return n_; }

  bool x(std::size_t i, std::size_t j) const { return bit(x_, i, j); }
  bool z(std::size_t i, std::size_t j) const { return bit(z_, i, j); }
  bool sign(std::size_t i) const { return sign_[i] != 0; }

  void set_x(std::size_t i, std::size_t j, bool v) { put(x_, i, j, v); }
  void set_z(std::size_t i, std::size_t j, bool v) { put(z_, i, j, v); }
  void set_sign(std::size_t i, bool v) { sign_[i] = v ? 1 : 0; }

  // Original qubit addressed by work column c.
  std::uint32_t qubit_label(std::size_t c) const { return label_[c]; }

  bool commutes(std::size_t i, std::size_t j) const {
    check_row(i);
    check_row(j);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_; ++k) {
      acc ^= (xw(i)[k] & zw(j)[k]) ^ (xw(j)[k] & zw(i)[k]);
    }
    return (std::popcount(acc) & 1u) == 0;
  }

  bool mutually_commuting() const {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        if (!commutes(i, j)) return false;
      }
    }
    return true;
  }

  // Replaces row `target` by the Pauli product of rows `source` and `target`.
  // The 2-bit phase accumulator stays explicit so an anticommuting pair is
  // detected instead of silently corrupting the sign.
  void row_sweep(std::size_t target, std::size_t source) {
    check_row(target);
    check_row(source);
    if (target == source) throw internal_error("row sweep with itself");
    int phase = 2 * (sign_[target] + sign_[source]);
    const std::uint64_t* xs = xw(source);
    const std::uint64_t* zs = zw(source);
    std::uint64_t* xt = xw(target);
    std::uint64_t* zt = zw(target);
    for (std::size_t k = 0; k < words_; ++k) {
      const std::uint64_t x1 = xs[k], z1 = zs[k];
      const std::uint64_t x2 = xt[k], z2 = zt[k];
      // i-exponent of the per-qubit products: +1 for XY, YZ, ZX and -1 for
      // XZ, YX, ZY (source letter on the left).
      const std::uint64_t plus =
          (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
      const std::uint64_t minus =
          (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
      phase += std::popcount(plus) - std::popcount(minus);
      xt[k] ^= x1;
      zt[k] ^= z1;
    }
    phase &= 3;
    if (phase & 1) throw internal_error("anticommuting sweep");
    sign_[target] = static_cast<std::uint8_t>(phase >> 1);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    check_row(a);
    check_row(b);
    if (a == b) return;
    for (std::size_t k = 0; k < words_; ++k) {
      std::swap(xw(a)[k], xw(b)[k]);
      std::swap(zw(a)[k], zw(b)[k]);
    }
    std::swap(sign_[a], sign_[b]);
  }

  // Swaps columns a and b of both blocks and records the relabeling; no gate
  // is associated with this operation.
  void swap_qubits(std::size_t a, std::size_t b) {
    check_col(a);
    check_col(b);
    if (a == b) return;
    for (std::size_t i = 0; i < m_; ++i) {
      bool t = x(i, a);
      set_x(i, a, x(i, b));
      set_x(i, b, t);
      t = z(i, a);
      set_z(i, a, z(i, b));
      set_z(i, b, t);
    }
    std::swap(label_[a], label_[b]);
  }

  // Exchange X[:,c] and Z[:,c]. Used by the normalization and sampling
  // algorithms, where the exchange is tracked in an index set rather than
  // applied as a Hadamard.
  void exchange_xz_column(std::size_t c) {
    check_col(c);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool t = x(i, c);
      set_x(i, c, z(i, c));
      set_z(i, c, t);
    }
  }

  // Clifford conjugation rules. Sign updates first, then block updates; all
  // four are validated against dense-matrix conjugation in the tests.
  void apply_h(std::size_t a) {
    check_col(a);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool xa = x(i, a), za = z(i, a);
      sign_[i] ^= static_cast<std::uint8_t>(xa & za);
      set_x(i, a, za);
      set_z(i, a, xa);
    }
  }

  void apply_s(std::size_t a) {
    check_col(a);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool xa = x(i, a), za = z(i, a);
      sign_[i] ^= static_cast<std::uint8_t>(xa & za);
      set_z(i, a, za ^ xa);
    }
  }

  void apply_sdg(std::size_t a) {
    check_col(a);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool xa = x(i, a), za = z(i, a);
      sign_[i] ^= static_cast<std::uint8_t>(xa & !za);
      set_z(i, a, za ^ xa);
    }
  }

  void apply_cx(std::size_t a, std::size_t b) {
    check_col(a);
    check_col(b);
    if (a == b) throw internal_error("cx on a single qubit");
    for (std::size_t i = 0; i < m_; ++i) {
      const bool xa = x(i, a), za = z(i, a);
      const bool xb = x(i, b), zb = z(i, b);
      sign_[i] ^= static_cast<std::uint8_t>(xa & zb & (xb ^ za ^ 1));
      set_z(i, a, za ^ zb);
      set_x(i, b, xb ^ xa);
    }
  }

  void apply_cz(std::size_t a, std::size_t b) {
    check_col(a);
    check_col(b);
    if (a == b) throw internal_error("cz on a single qubit");
    for (std::size_t i = 0; i < m_; ++i) {
      const bool xa = x(i, a), za = z(i, a);
      const bool xb = x(i, b), zb = z(i, b);
      sign_[i] ^= static_cast<std::uint8_t>(xa & xb & (za ^ zb));
      set_z(i, a, za ^ xb);
      set_z(i, b, zb ^ xa);
    }
  }

  void apply_gate(const Gate& g) {
    switch (g.kind) {
      case GateKind::H:
        apply_h(g.q0);
        break;
      case GateKind::S:
        apply_s(g.q0);
        break;
      case GateKind::Sdg:
        apply_sdg(g.q0);
        break;
      case GateKind::CX:
        apply_cx(g.q0, g.q1);
        break;
      case GateKind::CZ:
        apply_cz(g.q0, g.q1);
        break;
      default:
        throw internal_error("non-Clifford tableau gate");
    }
  }

  std::size_t rank() const {
    BitMatrix m(m_, 2 * n_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (x(i, j)) m.set(i, j, true);
        if (z(i, j)) m.set(i, j + n_, true);
      }
    }
    return m.rank();
  }

  bool row_is_identity(std::size_t i) const {
    for (std::size_t k = 0; k < words_; ++k) {
      if (xw(i)[k] != 0 || zw(i)[k] != 0) return false;
    }
    return true;
  }

  std::string row_string(std::size_t i) const {
    std::string s = sign(i) ? "-" : "";
    for (std::size_t j = 0; j < n_; ++j) {
      s.push_back(PauliTerm::letter_from_bits(x(i, j), z(i, j)));
    }
    return s;
  }

  Bits x_row(std::size_t i) const { return row_bits(x_, i); }
  Bits z_row(std::size_t i) const { return row_bits(z_, i); }

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::vector<std::uint8_t> sign_;
  std::vector<std::uint32_t> label_;

  const std::uint64_t* xw(std::size_t i) const { return x_.data() + i * words_; }
  const std::uint64_t* zw(std::size_t i) const { return z_.data() + i * words_; }
  std::uint64_t* xw(std::size_t i) { return x_.data() + i * words_; }
  std::uint64_t* zw(std::size_t i) { return z_.data() + i * words_; }

  bool bit(const std::vector<std::uint64_t>& blk, std::size_t i,
           std::size_t j) const {
    return (blk[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  void put(std::vector<std::uint64_t>& blk, std::size_t i, std::size_t j,
           bool v) {
    const std::uint64_t mask = 1ULL << (j & 63);
    if (v) {
      blk[i * words_ + (j >> 6)] |= mask;
    } else {
      blk[i * words_ + (j >> 6)] &= ~mask;
    }
  }

  Bits row_bits(const std::vector<std::uint64_t>& blk, std::size_t i) const {
    Bits b(n_);
    for (std::size_t k = 0; k < words_; ++k) b.words()[k] = blk[i * words_ + k];
    return b;
  }

  void check_row(std::size_t i) const {
    if (i >= m_) throw internal_error("tableau row index out of range");
  }
  void check_col(std::size_t j) const {
    if (j >= n_) throw internal_error("tableau column index out of range");
  }
};

}  // namespace psyn
