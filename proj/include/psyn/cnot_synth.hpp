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

#include <cmath>
#include <unordered_map>
#include <utility>
#include <vector>

#include "psyn/bitmat.hpp"
#include "psyn/circuit.hpp"
#include "psyn/common.hpp"

namespace psyn {

// CX(control, target) acts on a basis bitstring as v[target] ^= v[control].
// The composite linear map of a gate list g1..gT (temporal order) is
// E(gT) * ... * E(g1) with E = I + e_target e_control^T.
inline BitMatrix cx_sequence_matrix(const std::vector<Gate>& gates,
                                    std::size_t n) {
  BitMatrix m = BitMatrix::identity(n);
  for (const Gate& g : gates) {
    if (g.kind != GateKind::CX) throw internal_error("expected CX sequence");
    m.xor_row(g.q1, g.q0);
  }
  return m;
}

namespace detail {

struct RowOp {
  std::size_t target;
  std::size_t source;
};

// Block-partitioned Gaussian elimination: returns row ops (applied in order)
// that bring `a` to upper-triangular form with a unit diagonal. Duplicate
// sub-rows within each column section are eliminated first, which is where
// the O(n^2/log n) saving comes from.
inline std::vector<RowOp> lower_synth(BitMatrix& a, std::size_t block) {
  const std::size_t n = a.rows();
  std::vector<RowOp> ops;
  for (std::size_t sec = 0; sec * block < n; ++sec) {
    const std::size_t c0 = sec * block;
    const std::size_t c1 = std::min(c0 + block, n);
    std::unordered_map<std::uint64_t, std::size_t> seen;
    for (std::size_t row = c0; row < n; ++row) {
      std::uint64_t pattern = 0;
      for (std::size_t c = c0; c < c1; ++c) {
        pattern = (pattern << 1) | (a.get(row, c) ? 1u : 0u);
      }
      if (pattern == 0) continue;
      auto [it, inserted] = seen.emplace(pattern, row);
      if (!inserted) {
        a.xor_row(row, it->second);
        ops.push_back({row, it->second});
      }
    }
    for (std::size_t c = c0; c < c1; ++c) {
      if (!a.get(c, c)) {
        std::size_t pivot = n;
        for (std::size_t r = c + 1; r < n; ++r) {
          if (a.get(r, c)) {
            pivot = r;
            break;
          }
        }
        if (pivot == n) throw data_error("singular matrix");
        a.xor_row(c, pivot);
        ops.push_back({c, pivot});
      }
      for (std::size_t r = c + 1; r < n; ++r) {
        if (a.get(r, c)) {
          a.xor_row(r, c);
          ops.push_back({r, c});
        }
      }
    }
  }
  return ops;
}

}  // namespace detail

// Synthesizes a CX sequence realizing the invertible linear map `l` exactly,
// using sections of `block_size` columns.
inline std::vector<Gate> pmh_resynthesize(const BitMatrix& l,
                                          std::size_t block_size) {
  if (l.rows() != l.cols()) throw data_error("matrix must be square");
  const std::size_t n = l.rows();
  if (n == 0) return {};
  if (block_size < 1) block_size = 1;
  block_size = std::min({block_size, n, std::size_t{64}});

  BitMatrix work = l;
  const std::vector<detail::RowOp> lower = detail::lower_synth(work, block_size);
  BitMatrix upper_t = work.transposed();
  const std::vector<detail::RowOp> upper =
      detail::lower_synth(upper_t, block_size);

  // With L_p..L_1 * A = U and W_q..W_1 * U^T = I we have
  // A = L_1..L_p * W_q^T..W_1^T, so the temporal gate order is the W ops
  // (with control/target transposed) followed by the L ops reversed.
  std::vector<Gate> gates;
  gates.reserve(lower.size() + upper.size());
  for (const auto& op : upper) {
    gates.push_back(Gate::cx(static_cast<std::uint32_t>(op.target),
                             static_cast<std::uint32_t>(op.source)));
  }
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
    gates.push_back(Gate::cx(static_cast<std::uint32_t>(it->source),
                             static_cast<std::uint32_t>(it->target)));
  }
  return gates;
}

inline std::size_t pmh_default_block(std::size_t n) {
  if (n <= 2) return 1;
  const double lg = std::log2(static_cast<double>(n));
  return static_cast<std::size_t>(std::ceil(lg));
}

}  // namespace psyn
