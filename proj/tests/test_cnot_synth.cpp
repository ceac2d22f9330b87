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

#include <vector>

#include "psyn/cnot_synth.hpp"
#include "psyn/rng.hpp"

namespace psyn {
namespace {

BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m.set(i, j, rows[i][j] != 0);
    }
  }
  return m;
}

void expect_synthesizes(const BitMatrix& l, std::size_t block) {
  const std::vector<Gate> gates = pmh_resynthesize(l, block);
  const BitMatrix composed = cx_sequence_matrix(gates, l.rows());
  EXPECT_EQ(composed, l) << "block " << block << "\n" << l.to_string();
}

TEST(CnotSynth, IdentityIsEmpty) {
  EXPECT_TRUE(pmh_resynthesize(BitMatrix::identity(4), 2).empty());
}

TEST(CnotSynth, SingleElementaryMatrix) {
  const BitMatrix l = from_rows({{1, 0}, {1, 1}});
  const std::vector<Gate> gates = pmh_resynthesize(l, 1);
  ASSERT_EQ(gates.size(), 1u);
  EXPECT_EQ(gates[0], Gate::cx(0, 1));
}

TEST(CnotSynth, SingularRejected) {
  EXPECT_THROW(pmh_resynthesize(from_rows({{1, 1}, {1, 1}}), 1), data_error);
  EXPECT_THROW(pmh_resynthesize(BitMatrix(3, 3), 1), data_error);
}

TEST(CnotSynth, ExhaustiveSmallInvertibles) {
  // All invertible 2x2 (6) and 3x3 (168) matrices, every block size.
  for (std::size_t n : {2u, 3u}) {
    const std::size_t cells = n * n;
    std::size_t count = 0;
    for (std::size_t bits = 0; bits < (std::size_t{1} << cells); ++bits) {
      BitMatrix m(n, n);
      for (std::size_t c = 0; c < cells; ++c) {
        m.set(c / n, c % n, (bits >> c) & 1u);
      }
      if (!m.is_invertible()) continue;
      ++count;
      for (std::size_t block = 1; block <= n; ++block) {
        expect_synthesizes(m, block);
      }
    }
    EXPECT_EQ(count, n == 2 ? 6u : 168u);
  }
}

TEST(CnotSynth, RandomLargeInstances) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Rng child = rng.stream(trial);
    const std::size_t n = 8 + child.below(13);
    BitMatrix m(0, 0);
    do {
      m = BitMatrix::random(n, n, child);
    } while (!m.is_invertible());
    expect_synthesizes(m, 1);
    expect_synthesizes(m, pmh_default_block(n));
    expect_synthesizes(m, n);
  }
}

TEST(CnotSynth, BestBlockBeatsPlainEliminationOnAverage) {
  // Plain per-entry elimination of a dense invertible matrix uses O(n^2)
  // gates; the block-partitioned synthesis should win clearly at n = 20.
  Rng rng(9);
  std::size_t plain_total = 0, best_total = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Rng child = rng.stream(trial);
    BitMatrix m(0, 0);
    do {
      m = BitMatrix::random(20, 20, child);
    } while (!m.is_invertible());
    const std::size_t plain = pmh_resynthesize(m, 1).size();
    std::size_t best = plain;
    std::size_t best_block = 1;
    for (std::size_t b = 2; b <= 20; ++b) {
      const std::size_t size = pmh_resynthesize(m, b).size();
      if (size < best) {
        best = size;
        best_block = b;
      }
    }
    EXPECT_LE(best, plain);
    EXPECT_GE(best_block, 2u);
    EXPECT_LE(best_block, 6u);
    plain_total += plain;
    best_total += best;
  }
  EXPECT_LT(best_total, plain_total);
}

}  // namespace
}  // namespace psyn
