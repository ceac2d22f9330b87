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
#include <cstdint>
#include <vector>

#include "psyn/bitmat.hpp"
#include "psyn/common.hpp"
#include "psyn/rng.hpp"
#include "psyn/tableau.hpp"

namespace psyn {

// Uniformly sampled generator set of a maximal commuting n-Pauli group.
// Per row i: X[i,i] = 1, then either the X/Z columns are exchanged (the
// single extra outcome of the 2^{n-i+1}+1 draw) or the free Z bits fill
// Z[i, i..n) symmetrically. Signs are randomized.
inline Tableau sample_generators(std::size_t n, Rng& rng) {
  if (n == 0) throw data_error("need at least one qubit");
  if (n > 62) throw data_error("generator sampling supports at most 62 qubits");
  Tableau t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t free_bits = n - i;
    const std::uint64_t top = std::uint64_t{1} << free_bits;
    std::uint64_t r = rng.up_to(top);
    t.set_x(i, i, true);
    if (r == top) {
      t.exchange_xz_column(i);
    } else {
      for (std::size_t j = i; j < n; ++j) {
        const bool bit = (r & 1u) != 0;
        t.set_z(i, j, bit);
        t.set_z(j, i, bit);
        r >>= 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) t.set_sign(i, rng.coin());
  return t;
}

struct FullRankSample {
  BitMatrix matrix;
  std::size_t attempts = 0;
};

// Rejection-samples uniform m x n bit matrices until the rank is n.
inline FullRankSample sample_full_rank_binary(std::size_t m, std::size_t n,
                                              Rng& rng,
                                              std::size_t max_attempts = 1000) {
  if (m < n) throw data_error("need at least n rows");
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    BitMatrix b = BitMatrix::random(m, n, rng);
    if (b.rank() == n) return {std::move(b), attempt};
  }
  throw data_error("full-rank sampling did not terminate");
}

// Row i of the output is the Pauli product of the generator rows selected by
// B[i,:], with signs tracked through the product phases.
inline Tableau compose_basis(const Tableau& gen, const BitMatrix& b) {
  const std::size_t n = gen.rows();
  if (b.cols() != n) throw data_error("selector width mismatch");
  if (b.rank() != std::min(b.rows(), b.cols())) {
    throw data_error("selector matrix is rank deficient");
  }
  // Work rows: [generators | accumulators]; sweeps handle the phases.
  Tableau t(n + b.rows(), gen.qubits());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 0; q < gen.qubits(); ++q) {
      t.set_x(i, q, gen.x(i, q));
      t.set_z(i, q, gen.z(i, q));
    }
    t.set_sign(i, gen.sign(i));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b.get(i, j)) t.row_sweep(n + i, j);
    }
  }
  Tableau out(b.rows(), gen.qubits());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t q = 0; q < gen.qubits(); ++q) {
      out.set_x(i, q, t.x(n + i, q));
      out.set_z(i, q, t.z(n + i, q));
    }
    out.set_sign(i, t.sign(n + i));
  }
  return out;
}

inline void randomize_signs(Tableau& t, Rng& rng) {
  for (std::size_t i = 0; i < t.rows(); ++i) t.set_sign(i, rng.coin());
}

// Unique representation of a full-rank commuting group: the Z block after
// normalization, the index set of columns that needed an X/Z exchange, and
// the signs of the first n rows.
struct CanonicalForm {
  BitMatrix z;
  std::vector<std::uint32_t> hadamard_set;
  Bits signs;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.z == b.z && a.hadamard_set == b.hadamard_set && a.signs == b.signs;
  }
};

// Column-by-column elimination: pivot in X, with an X/Z column exchange
// (recorded in the index set) whenever X has none. Requires [X, Z] of rank n.
inline CanonicalForm normalize_full_rank(const Tableau& input) {
  Tableau t = input;
  const std::size_t m = t.rows();
  const std::size_t n = t.qubits();
  if (m < n) throw data_error("tableau not full rank");

  CanonicalForm form;
  for (std::size_t k = 0; k < n; ++k) {
    const auto find_pivot = [&]() -> std::size_t {
      for (std::size_t i = k; i < m; ++i) {
        if (t.x(i, k)) return i;
      }
      return m;
    };
    std::size_t pivot = find_pivot();
    if (pivot == m) {
      form.hadamard_set.push_back(static_cast<std::uint32_t>(k));
      t.exchange_xz_column(k);
      pivot = find_pivot();
      if (pivot == m) throw data_error("tableau not full rank");
    }
    t.swap_rows(pivot, k);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != k && t.x(i, k)) t.row_sweep(i, k);
    }
  }

  form.z = BitMatrix(n, n);
  form.signs = Bits(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) form.z.set(i, j, t.z(i, j));
    form.signs.set(i, t.sign(i));
  }
  return form;
}

// Same generator set up to signs; sign-sensitive comparison on request.
inline bool canonical_equal(const Tableau& a, const Tableau& b,
                            bool include_signs = false) {
  const CanonicalForm fa = normalize_full_rank(a);
  const CanonicalForm fb = normalize_full_rank(b);
  if (!(fa.z == fb.z) || fa.hadamard_set != fb.hadamard_set) return false;
  return !include_signs || fa.signs == fb.signs;
}

}  // namespace psyn
