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
#include <numeric>
#include <vector>

#include "psyn/bitmat.hpp"
#include "psyn/common.hpp"
#include "psyn/diagonal_term.hpp"

namespace psyn {

// CX count of the cancelled parity-ladder circuit:
// |z_1| + sum_j |z_j ^ z_{j+1}| + |z_m|. All-identity masks only contribute
// a global phase and are skipped, matching the circuit builder.
inline std::size_t exp_cx_cost(const std::vector<DiagonalTerm>& terms) {
  std::size_t cost = 0;
  const Bits* prev = nullptr;
  for (const DiagonalTerm& t : terms) {
    if (t.is_identity()) continue;
    cost += prev ? prev->hamming_distance(t.zmask) : t.zmask.popcount();
    prev = &t.zmask;
  }
  if (prev) cost += prev->popcount();
  return cost;
}

inline std::vector<std::uint32_t> canonical_qubit_order(std::size_t n) {
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  return order;
}

// Stable recursive partition of the terms along the qubits in `qubit_order`:
// identity letters sort before Z at the top level and the preference flips
// inside every Z branch, i.e. the masks are sorted by their prefix-XOR
// (binary reflected) key. Orderings that do not improve the transition count
// are discarded in favor of the input order.
inline std::vector<DiagonalTerm> order_terms(
    std::vector<DiagonalTerm> terms, const std::vector<std::uint32_t>& qubit_order) {
  if (terms.empty()) return terms;
  const std::size_t n = terms.front().num_qubits();
  if (qubit_order.size() != n) throw data_error("invalid qubit permutation");
  std::vector<bool> seen(n, false);
  for (std::uint32_t q : qubit_order) {
    if (q >= n || seen[q]) throw data_error("invalid qubit permutation");
    seen[q] = true;
  }

  std::vector<DiagonalTerm> sorted = terms;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const DiagonalTerm& a, const DiagonalTerm& b) {
                     bool pa = false, pb = false;
                     for (std::uint32_t q : qubit_order) {
                       pa = pa != a.zmask.get(q);
                       pb = pb != b.zmask.get(q);
                       if (pa != pb) return !pa;
                     }
                     return false;
                   });
  if (exp_cx_cost(sorted) <= exp_cx_cost(terms)) return sorted;
  return terms;
}

}  // namespace psyn
