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
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "psyn/common.hpp"
#include "psyn/pauli.hpp"

namespace psyn {

// A Hamiltonian as a weighted set of Pauli strings.
//
// File format, one term per line:
//   <coefficient> <pauli-string>
// '#' starts a comment, blank lines are ignored, letters are
// case-insensitive, and a leading '-' on the string folds into the
// coefficient. Comments of the form "# key: value" before the first term
// populate the metadata map.
struct HamiltonianFile {
  std::size_t n = 0;
  std::vector<PauliTerm> terms;
  std::string source;
  std::map<std::string, std::string> metadata;
};

inline HamiltonianFile parse_hamiltonian(const std::string& text,
                                         const std::string& source = "") {
  HamiltonianFile h;
  h.source = source;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  const auto fail = [&](const std::string& msg) {
    std::ostringstream os;
    os << (source.empty() ? "<input>" : source) << ":" << lineno << ": " << msg;
    throw data_error(os.str());
  };

  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    std::string comment;
    if (hash != std::string::npos) {
      comment = line.substr(hash + 1);
      line.resize(hash);
    }
    if (h.terms.empty() && !comment.empty()) {
      const std::size_t colon = comment.find(':');
      if (colon != std::string::npos) {
        auto trim = [](std::string s) {
          const auto a = s.find_first_not_of(" \t\r");
          const auto b = s.find_last_not_of(" \t\r");
          return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(comment.substr(0, colon));
        const std::string value = trim(comment.substr(colon + 1));
        if (!key.empty() && key.find(' ') == std::string::npos && !value.empty()) {
          h.metadata.emplace(key, value);
        }
      }
    }

    std::istringstream fields(line);
    std::string coeff_str, pauli_str, extra;
    if (!(fields >> coeff_str)) continue;  // blank or comment-only line
    if (!(fields >> pauli_str)) fail("missing Pauli string");
    if (fields >> extra) fail("unexpected trailing token '" + extra + "'");

    char* end = nullptr;
    double coeff = std::strtod(coeff_str.c_str(), &end);
    if (end == coeff_str.c_str() || *end != '\0' || !std::isfinite(coeff)) {
      fail("invalid coefficient '" + coeff_str + "'");
    }
    if (!pauli_str.empty() && pauli_str.front() == '-') {
      coeff = -coeff;
      pauli_str.erase(pauli_str.begin());
    }
    if (pauli_str.empty()) fail("empty Pauli string");
    const std::string letters = normalize_pauli_letters(pauli_str);
    for (char c : letters) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        fail(std::string("invalid Pauli letter '") + c + "'");
      }
    }
    if (h.terms.empty()) {
      h.n = letters.size();
    } else if (letters.size() != h.n) {
      fail("Pauli string length mismatch");
    }
    h.terms.emplace_back(letters, coeff);
  }
  return h;
}

inline HamiltonianFile load_hamiltonian(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw data_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_hamiltonian(buf.str(), path);
}

}  // namespace psyn
