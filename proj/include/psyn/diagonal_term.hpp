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

#include <string>

#include "psyn/bitmat.hpp"

namespace psyn {

// A diagonalized Pauli: only I and Z letters, a sign and a rotation angle.
struct DiagonalTerm {
  Bits zmask;
  bool sign = false;
  double angle = 0.0;

  DiagonalTerm() = default;
  DiagonalTerm(Bits mask, bool s, double a)
      : zmask(std::move(mask)), sign(s), angle(a) {}

  std::size_t num_qubits() const { return zmask.size(); }
  bool is_identity() const { return !zmask.any(); }

  // Rotation angle with the sign folded in.
  double effective_angle() const { return sign ? -angle : angle; }

  std::string letters() const {
    std::string s(zmask.size(), 'I');
    for (std::size_t i = 0; i < zmask.size(); ++i) {
      if (zmask.get(i)) s[i] = 'Z';
    }
    return s;
  }
};

}  // namespace psyn
