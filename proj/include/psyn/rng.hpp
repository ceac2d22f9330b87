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

#include <cstdint>
#include <random>

namespace psyn {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seedable random source. The raw stream is the standard-mandated
// mt19937_64 sequence; uniform draws below are implemented on top of it
// (not via std::uniform_int_distribution) so that every draw is
// reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  // Independent child stream; stream ids never collide with the parent.
  Rng stream(std::uint64_t id) const {
    std::uint64_t s = seed_ ^ (0xa02bdbf7bb3c0a7ULL * (id + 1));
    return Rng(splitmix64(s));
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits() { return engine_(); }

  bool coin() { return (bits() >> 63) != 0; }

  // Uniform integer in [0, n). Rejection sampling keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = bits();
    } while (r >= limit);
    return r % n;
  }

  // Uniform integer in [0, n] (inclusive upper bound).
  std::uint64_t up_to(std::uint64_t n) { return below(n + 1); }

  double real() {  // [0, 1)
    return static_cast<double>(bits() >> 11) * 0x1.0p-53;
  }

  template <typename It>
  void shuffle(It first, It last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      std::swap(first[i - 1], first[below(i)]);
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace psyn
