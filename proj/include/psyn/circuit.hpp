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
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "psyn/common.hpp"

namespace psyn {

enum class GateKind : std::uint8_t { H, S, Sdg, X, CX, CZ, RZ, CRZ };

inline bool is_two_qubit(GateKind k) {
  return k == GateKind::CX || k == GateKind::CZ || k == GateKind::CRZ;
}

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "h";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::X:
      return "x";
    case GateKind::CX:
      return "cx";
    case GateKind::CZ:
      return "cz";
    case GateKind::RZ:
      return "rz";
    case GateKind::CRZ:
      return "crz";
  }
  return "?";
}

// For CX/CRZ q0 is the control and q1 the target; CZ is symmetric.
struct Gate {
  GateKind kind;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;
  double angle = 0.0;

  static Gate h(std::uint32_t q) { return {GateKind::H, q, q, 0.0}; }
  static Gate s(std::uint32_t q) { return {GateKind::S, q, q, 0.0}; }
  static Gate sdg(std::uint32_t q) { return {GateKind::Sdg, q, q, 0.0}; }
  static Gate x(std::uint32_t q) { return {GateKind::X, q, q, 0.0}; }
  static Gate cx(std::uint32_t c, std::uint32_t t) {
    return {GateKind::CX, c, t, 0.0};
  }
  static Gate cz(std::uint32_t a, std::uint32_t b) {
    return {GateKind::CZ, a, b, 0.0};
  }
  static Gate rz(std::uint32_t q, double theta) {
    return {GateKind::RZ, q, q, theta};
  }
  static Gate crz(std::uint32_t c, std::uint32_t t, double theta) {
    return {GateKind::CRZ, c, t, theta};
  }

  bool single_qubit() const { return !is_two_qubit(kind); }

  bool touches(std::uint32_t q) const {
    return q0 == q || (is_two_qubit(kind) && q1 == q);
  }

  bool overlaps(const Gate& other) const {
    if (touches(other.q0)) return true;
    return is_two_qubit(other.kind) && touches(other.q1);
  }

  // True when composing `other` directly after this gate yields the identity.
  bool cancels_with(const Gate& other) const {
    if (kind == GateKind::RZ || kind == GateKind::CRZ) {
      return other.kind == kind && other.q0 == q0 && other.q1 == q1 &&
             other.angle == -angle;
    }
    switch (kind) {
      case GateKind::H:
      case GateKind::X:
        return other.kind == kind && other.q0 == q0;
      case GateKind::S:
        return other.kind == GateKind::Sdg && other.q0 == q0;
      case GateKind::Sdg:
        return other.kind == GateKind::S && other.q0 == q0;
      case GateKind::CX:
        return other.kind == GateKind::CX && other.q0 == q0 && other.q1 == q1;
      case GateKind::CZ:
        return other.kind == GateKind::CZ &&
               ((other.q0 == q0 && other.q1 == q1) ||
                (other.q0 == q1 && other.q1 == q0));
      default:
        return false;
    }
  }

  Gate adjoint() const {
    Gate g = *this;
    switch (kind) {
      case GateKind::S:
        g.kind = GateKind::Sdg;
        break;
      case GateKind::Sdg:
        g.kind = GateKind::S;
        break;
      case GateKind::RZ:
      case GateKind::CRZ:
        g.angle = -angle;
        break;
      default:
        break;
    }
    return g;
  }

  friend bool operator==(const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.q0 == b.q0 && a.q1 == b.q1 &&
           a.angle == b.angle;
  }
};

struct CircuitStats {
  std::size_t cnot_count = 0;          // CX + CZ (+ 2 per controlled RZ)
  std::size_t single_qubit_count = 0;  // H, S, Sdg, X, RZ (+ 2 per crz)
  std::size_t depth = 0;
  std::size_t cnot_exp = 0;  // CX count of the exponentiation core
  std::size_t cz_count = 0;  // CZ portion of cnot_count, reported separately
};

struct Circuit {
  std::uint32_t n_qubits = 0;
  bool uses_ancilla = false;
  double global_phase = 0.0;
  std::size_t exp_cx = 0;  // set by the circuit builders
  std::vector<Gate> gates;

  explicit Circuit(std::uint32_t n = 0) : n_qubits(n) {}

  void add(const Gate& g) {
    check(g.q0);
    if (is_two_qubit(g.kind)) {
      check(g.q1);
      if (g.q0 == g.q1) throw internal_error("two-qubit gate on one qubit");
    }
    gates.push_back(g);
  }

  void add_all(const std::vector<Gate>& gs) {
    for (const Gate& g : gs) add(g);
  }

  // Gates in reverse order with each gate inverted.
  Circuit adjoint() const {
    Circuit out(n_qubits);
    out.uses_ancilla = uses_ancilla;
    out.global_phase = -global_phase;
    out.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
      out.gates.push_back(it->adjoint());
    }
    return out;
  }

  std::size_t size() const { return gates.size(); }

 private:
  void check(std::uint32_t q) const {
    if (q >= n_qubits) throw internal_error("gate qubit out of range");
  }
};

// Removes adjacent gate/adjoint pairs acting on the same qubits whenever no
// gate in between touches those qubits, iterating to a fixpoint.
inline Circuit peephole_cancel(Circuit c) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<bool> dead(c.gates.size(), false);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      if (dead[i]) continue;
      for (std::size_t j = i + 1; j < c.gates.size(); ++j) {
        if (dead[j]) continue;
        if (c.gates[i].cancels_with(c.gates[j])) {
          dead[i] = dead[j] = true;
          changed = true;
          break;
        }
        if (c.gates[i].overlaps(c.gates[j])) break;
      }
    }
    if (changed) {
      std::vector<Gate> kept;
      kept.reserve(c.gates.size());
      for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (!dead[i]) kept.push_back(c.gates[i]);
      }
      c.gates = std::move(kept);
    }
  }
  return c;
}

inline std::size_t circuit_depth(const Circuit& c) {
  std::vector<std::size_t> level(c.n_qubits, 0);
  std::size_t depth = 0;
  for (const Gate& g : c.gates) {
    std::size_t at = level[g.q0];
    if (is_two_qubit(g.kind)) at = std::max(at, level[g.q1]);
    ++at;
    level[g.q0] = at;
    if (is_two_qubit(g.kind)) level[g.q1] = at;
    depth = std::max(depth, at);
  }
  return depth;
}

inline CircuitStats circuit_stats(const Circuit& c) {
  CircuitStats s;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::CX:
        ++s.cnot_count;
        break;
      case GateKind::CZ:
        ++s.cnot_count;
        ++s.cz_count;
        break;
      case GateKind::CRZ:
        // expanded cost of a controlled rotation
        s.cnot_count += 2;
        s.single_qubit_count += 2;
        break;
      default:
        ++s.single_qubit_count;
        break;
    }
  }
  s.depth = circuit_depth(c);
  s.cnot_exp = c.exp_cx;
  return s;
}

}  // namespace psyn
