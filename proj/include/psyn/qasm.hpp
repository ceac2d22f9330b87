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

#include <cstdio>
#include <string>

#include "psyn/circuit.hpp"
#include "psyn/common.hpp"

namespace psyn {

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

// OpenQASM 2.0 text for a circuit. The internal RZ(theta) convention is
// diag(e^{i theta}, e^{-i theta}); qelib1's rz(lambda) is diag(1, e^{i
// lambda}), so RZ(theta) = e^{i theta} * rz(-2 theta) and the dropped phase
// theta is accumulated into the global-phase comment. crz carries no such
// correction. Output is byte-stable for a given circuit.
inline std::string emit_qasm(const Circuit& c) {
  double dropped_phase = c.global_phase;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::RZ) dropped_phase += g.angle;
  }

  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "// dropped global phase: " + detail::format_double(dropped_phase) + "\n";
  out += "qreg q[" + std::to_string(c.n_qubits) + "];\n";
  for (const Gate& g : c.gates) {
    const std::string q0 = "q[" + std::to_string(g.q0) + "]";
    switch (g.kind) {
      case GateKind::H:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::X:
        out += std::string(gate_name(g.kind)) + " " + q0 + ";\n";
        break;
      case GateKind::CX:
      case GateKind::CZ:
        out += std::string(gate_name(g.kind)) + " " + q0 + ", q[" +
               std::to_string(g.q1) + "];\n";
        break;
      case GateKind::RZ:
        out += "rz(" + detail::format_double(-2.0 * g.angle) + ") " + q0 + ";\n";
        break;
      case GateKind::CRZ:
        out += "crz(" + detail::format_double(-2.0 * g.angle) + ") " + q0 +
               ", q[" + std::to_string(g.q1) + "];\n";
        break;
    }
  }
  return out;
}

}  // namespace psyn
