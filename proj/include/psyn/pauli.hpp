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

#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "psyn/common.hpp"

namespace psyn {

// One n-qubit Pauli string with a real coefficient. Any sign on the string
// itself is folded into the coefficient, so `letters` is always unsigned.
// Qubit 0 is the leftmost letter (most significant tensor factor).
struct PauliTerm {
  std::string letters;  // over {I, X, Y, Z}
  double coeff = 0.0;

  PauliTerm() = default;
  PauliTerm(std::string s, double c) : letters(std::move(s)), coeff(c) {
    validate();
  }

  std::size_t num_qubits() const { return letters.size(); }

  bool is_identity() const {
    return letters.find_first_not_of('I') == std::string::npos;
  }

  void validate() const {
    if (letters.empty()) throw data_error("empty Pauli string");
    for (char c : letters) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw data_error(std::string("invalid Pauli letter '") + c + "'");
      }
    }
    if (!std::isfinite(coeff)) throw data_error("non-finite coefficient");
  }

  // (x, z) encoding: X=(1,0), Z=(0,1), Y=(1,1), I=(0,0).
  bool x_bit(std::size_t q) const {
    return letters[q] == 'X' || letters[q] == 'Y';
  }
  bool z_bit(std::size_t q) const {
    return letters[q] == 'Z' || letters[q] == 'Y';
  }

  static char letter_from_bits(bool x, bool z) {
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
  }
};

inline std::string normalize_pauli_letters(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) out.push_back(static_cast<char>(std::toupper(c)));
  return out;
}

}  // namespace psyn
