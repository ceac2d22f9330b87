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
#include <string>
#include <vector>

#include "psyn/common.hpp"
#include "psyn/rng.hpp"

namespace psyn {

// Packed bit vector over GF(2). Word-parallel XOR/AND keep the row
// operations of the tableau algorithms cheap.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : size_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    const std::uint64_t mask = 1ULL << (i & 63);
    if (v) {
      w_[i >> 6] |= mask;
    } else {
      w_[i >> 6] &= ~mask;
    }
  }

  void flip(std::size_t i) { w_[i >> 6] ^= 1ULL << (i & 63); }

  void xor_with(const Bits& other) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= other.w_[k];
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (std::uint64_t w : w_) {
      if (w != 0) return true;
    }
    return false;
  }

  bool parity_and(const Bits& other) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & other.w_[k];
    return std::popcount(acc) & 1u;
  }

  std::size_t hamming_distance(const Bits& other) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      c += static_cast<std::size_t>(std::popcount(w_[k] ^ other.w_[k]));
    }
    return c;
  }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.size_ == b.size_ && a.w_ == b.w_;
  }

  friend bool operator<(const Bits& a, const Bits& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.w_ < b.w_;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> w_;
};

// Dense binary matrix with GF(2) row arithmetic.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), r_(rows, Bits(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static BitMatrix random(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.coin());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }
  void flip(std::size_t i, std::size_t j) { r_[i].flip(j); }

  Bits& row(std::size_t i) { return r_[i]; }
  const Bits& row(std::size_t i) const { return r_[i]; }

  void xor_row(std::size_t target, std::size_t source) {
    r_[target].xor_with(r_[source]);
  }

  void swap_rows(std::size_t a, std::size_t b) { std::swap(r_[a], r_[b]); }

  std::size_t rank() const {
    BitMatrix work = *this;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
      std::size_t pivot = rows_;
      for (std::size_t i = r; i < rows_; ++i) {
        if (work.get(i, j)) {
          pivot = i;
          break;
        }
      }
      if (pivot == rows_) continue;
      work.swap_rows(r, pivot);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i != r && work.get(i, j)) work.xor_row(i, r);
      }
      ++r;
    }
    return r;
  }

  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  // this * other over GF(2).
  BitMatrix multiply(const BitMatrix& other) const {
    if (cols_ != other.rows()) throw internal_error("bitmatrix shape mismatch");
    BitMatrix out(rows_, other.cols());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        if (get(i, k)) out.row(i).xor_with(other.row(k));
      }
    }
    return out;
  }

  BitMatrix transposed() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (get(i, j)) out.set(j, i, true);
      }
    }
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += r_[i].to_string();
      s += '\n';
    }
    return s;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Bits> r_;
};

}  // namespace psyn
