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

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "psyn/circuit.hpp"
#include "psyn/cnot_synth.hpp"
#include "psyn/common.hpp"
#include "psyn/diagonal_term.hpp"
#include "psyn/pauli.hpp"
#include "psyn/tableau.hpp"

namespace psyn {

enum class DiagMethod { CZ, CNot, CNotLog2, CNotBest, Greedy1, Greedy2 };

inline const char* diag_method_name(DiagMethod m) {
  switch (m) {
    case DiagMethod::CZ:
      return "cz";
    case DiagMethod::CNot:
      return "cnot";
    case DiagMethod::CNotLog2:
      return "cnot-log2";
    case DiagMethod::CNotBest:
      return "cnot-best";
    case DiagMethod::Greedy1:
      return "greedy1";
    case DiagMethod::Greedy2:
      return "greedy2";
  }
  return "?";
}

inline DiagMethod diag_method_from_name(const std::string& s) {
  if (s == "cz") return DiagMethod::CZ;
  if (s == "cnot") return DiagMethod::CNot;
  if (s == "cnot-log2") return DiagMethod::CNotLog2;
  if (s == "cnot-best") return DiagMethod::CNotBest;
  if (s == "greedy1") return DiagMethod::Greedy1;
  if (s == "greedy2") return DiagMethod::Greedy2;
  throw data_error("unknown diagonalization method: " + s);
}

struct DiagOptions {
  std::size_t block_size = 0;      // 0: ceil(log2 k) for cnot-log2
  bool phase_stage_first = false;  // emit the cz method as H-S-CZ-H
};

struct DiagResult {
  Circuit circuit;  // the gates of U in application order
  std::vector<DiagonalTerm> diag;
  DiagMethod method = DiagMethod::CZ;
  std::size_t rank = 0;
};

// Work/parallel tableau pair. The work tableau receives row operations and
// Clifford gates in its permuted column space; the parallel tableau receives
// only the gates, addressed by original qubit labels, so its rows stay in
// one-to-one correspondence with the input operators.
class DiagEngine {
 public:
  explicit DiagEngine(const Tableau& input)
      : work_(input), parallel_(input) {}

  Tableau& work() { return work_; }
  const Tableau& work() const { return work_; }
  const Tableau& parallel() const { return parallel_; }

  // `a`, `b` index work columns; the emitted gate addresses original qubits.
  void apply(GateKind kind, std::size_t a, std::size_t b,
             std::vector<Gate>& sink) {
    const std::uint32_t la = work_.qubit_label(a);
    Gate g{kind, la, la, 0.0};
    switch (kind) {
      case GateKind::H:
        work_.apply_h(a);
        parallel_.apply_h(la);
        break;
      case GateKind::S:
        work_.apply_s(a);
        parallel_.apply_s(la);
        break;
      case GateKind::Sdg:
        work_.apply_sdg(a);
        parallel_.apply_sdg(la);
        break;
      case GateKind::CX:
        g.q1 = work_.qubit_label(b);
        work_.apply_cx(a, b);
        parallel_.apply_cx(g.q0, g.q1);
        break;
      case GateKind::CZ:
        g.q1 = work_.qubit_label(b);
        work_.apply_cz(a, b);
        parallel_.apply_cz(g.q0, g.q1);
        break;
      default:
        throw internal_error("non-Clifford tableau gate");
    }
    sink.push_back(g);
  }

  Gate labeled_cx(std::size_t a, std::size_t b) const {
    return Gate::cx(work_.qubit_label(a), work_.qubit_label(b));
  }

 private:
  Tableau work_;
  Tableau parallel_;
};

// Stage driver of the X-block diagonalization: pivot search and sweeps in X,
// then in Z, Hadamards on the Z-pivot columns, and CX sweeps of any residual
// entries right of the diagonal. Pivot scans run column-major, first hit
// wins. Returns (k_x, rank).
inline std::pair<std::size_t, std::size_t> diagonalize_x(
    DiagEngine& eng, std::vector<Gate>& out) {
  Tableau& t = eng.work();
  const std::size_t m = t.rows();
  const std::size_t n = t.qubits();
  std::size_t k = 0;

  const auto stage = [&](bool use_z) {
    while (k < n && k < m) {
      std::size_t pi = m, pj = n;
      for (std::size_t j = k; j < n && pj == n; ++j) {
        for (std::size_t i = k; i < m; ++i) {
          const bool hit = use_z ? t.z(i, j) : t.x(i, j);
          if (hit) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pj == n) break;
      t.swap_rows(pi, k);
      t.swap_qubits(pj, k);
      for (std::size_t r = 0; r < m; ++r) {
        const bool hit = use_z ? t.z(r, k) : t.x(r, k);
        if (r != k && hit) t.row_sweep(r, k);
      }
      ++k;
    }
  };

  stage(false);
  const std::size_t kx = k;
  stage(true);
  const std::size_t rank = k;

  for (std::size_t j = kx; j < rank; ++j) eng.apply(GateKind::H, j, j, out);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = rank; j < n; ++j) {
      if (t.x(i, j)) eng.apply(GateKind::CX, i, j, out);
    }
  }

  // Commutativity forces the Z block below the rank to vanish on the pivot
  // columns; anything else means the input rows did not commute.
  for (std::size_t r = rank; r < m; ++r) {
    for (std::size_t c = 0; c < rank; ++c) {
      if (t.z(r, c)) throw internal_error("not a commuting set");
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (t.x(r, c)) throw internal_error("not a commuting set");
    }
  }
  return {kx, rank};
}

namespace detail {

inline void require_x_diagonal(const Tableau& t, std::size_t k) {
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.qubits(); ++j) {
      const bool expect = (i == j && i < k);
      if (t.x(i, j) != expect) {
        throw internal_error("X block is not diagonal of the stated rank");
      }
    }
  }
}

}  // namespace detail

// Pairwise CZ elimination of the symmetric Z sub-block, then S/H per column.
// With `phase_first` the phase gates precede the CZ stage (the H-S-CZ-H
// ordering); the gate set is identical either way since CZ gates never touch
// the Z diagonal.
inline void clear_z_pairwise(DiagEngine& eng, std::size_t k, bool phase_first,
                             std::vector<Gate>& out) {
  detail::require_x_diagonal(eng.work(), k);
  Tableau& t = eng.work();

  const auto phase_stage = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      if (t.z(i, i)) eng.apply(GateKind::S, i, i, out);
    }
  };

  if (phase_first) phase_stage();
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t.z(i, j)) {
        if (!t.z(j, i)) throw internal_error("Z sub-block not symmetric");
        eng.apply(GateKind::CZ, i, j, out);
      }
    }
  }
  if (!phase_first) phase_stage();
  for (std::size_t i = 0; i < k; ++i) eng.apply(GateKind::H, i, i, out);
}

enum class CxResynth { None, Log2, Best };

// CNOT-based update of the Z block: per row, an optional phase gate chosen by
// the running parity so the diagonal ends at one, then CX plus row sweep per
// eliminated entry; afterwards the first k Z columns match the X columns and
// a closing S/H stage clears X. Gates are emitted in H-S-CX-S-H stage order
// (each pre-stage S commutes with every earlier CX, which act on lower
// columns only). The CX stage can be re-synthesized block-wise.
inline void clear_z_cnot(DiagEngine& eng, std::size_t k, CxResynth resynth,
                         std::size_t block_size, std::vector<Gate>& out) {
  detail::require_x_diagonal(eng.work(), k);
  Tableau& t = eng.work();

  std::vector<Gate> s_pre;
  std::vector<Gate> cx_stage;
  std::vector<std::pair<std::size_t, std::size_t>> cx_cols;
  for (std::size_t i = 0; i < k; ++i) {
    bool parity = t.z(i, i);
    for (std::size_t j = 0; j < i; ++j) parity ^= t.z(i, j);
    if (!parity) eng.apply(GateKind::S, i, i, s_pre);
    for (std::size_t j = 0; j < i; ++j) {
      if (t.z(i, j)) {
        eng.apply(GateKind::CX, i, j, cx_stage);
        cx_cols.emplace_back(i, j);
        t.row_sweep(i, j);
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!t.z(i, i)) throw internal_error("Z diagonal not normalized");
  }

  if (resynth != CxResynth::None && !cx_cols.empty() && k >= 2) {
    BitMatrix composite = BitMatrix::identity(k);
    for (const auto& [ci, cj] : cx_cols) composite.xor_row(cj, ci);
    std::vector<std::size_t> blocks;
    if (resynth == CxResynth::Log2) {
      blocks.push_back(block_size == 0 ? pmh_default_block(k) : block_size);
    } else {
      for (std::size_t b = 1; b <= k; ++b) blocks.push_back(b);
    }
    // The plain elimination sequence stays in the running; for very small
    // instances it is often at least as short as the re-synthesized one.
    std::vector<Gate> best = cx_stage;
    for (std::size_t b : blocks) {
      std::vector<Gate> cand = pmh_resynthesize(composite, b);
      for (Gate& g : cand) {
        g = eng.labeled_cx(g.q0, g.q1);
      }
      if (cand.size() < best.size()) best = std::move(cand);
    }
    cx_stage = std::move(best);
  }

  std::vector<Gate> s_close;
  std::vector<Gate> h_close;
  for (std::size_t i = 0; i < k; ++i) eng.apply(GateKind::S, i, i, s_close);
  for (std::size_t i = 0; i < k; ++i) eng.apply(GateKind::H, i, i, h_close);

  out.insert(out.end(), s_pre.begin(), s_pre.end());
  out.insert(out.end(), cx_stage.begin(), cx_stage.end());
  out.insert(out.end(), s_close.begin(), s_close.end());
  out.insert(out.end(), h_close.begin(), h_close.end());
}

// Column-based elimination. Per iteration the cheapest way to finish one
// column is chosen: clearing it element-wise with CZ gates, or sweeping it
// with another column first (one CX plus their off-diagonal distance in CZ
// gates, plus at most one phase gate to fix the source diagonal). Ties are
// broken by scan order; greedy-2 first compares the single-qubit gate count.
inline void clear_z_greedy(DiagEngine& eng, std::size_t k,
                           bool tiebreak_singles, std::vector<Gate>& out) {
  detail::require_x_diagonal(eng.work(), k);
  Tableau& t = eng.work();
  const std::size_t m = t.rows();

  std::vector<bool> active(k, true);

  const auto offdiag_count = [&](std::size_t c) {
    std::size_t cnt = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (r != c && t.z(r, c)) ++cnt;
    }
    return cnt;
  };
  const auto offdiag_distance = [&](std::size_t a, std::size_t b) {
    std::size_t d = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (r != a && r != b && t.z(r, a) != t.z(r, b)) ++d;
    }
    return d;
  };

  struct Move {
    bool pair = false;
    std::size_t target = 0;
    std::size_t helper = 0;
    std::size_t cx = std::numeric_limits<std::size_t>::max();
    std::size_t singles = 0;
  };

  const auto better = [&](const Move& a, const Move& b) {
    if (a.cx != b.cx) return a.cx < b.cx;
    if (tiebreak_singles && a.singles != b.singles) return a.singles < b.singles;
    return false;  // keep the first minimum encountered
  };

  std::size_t remaining = k;
  while (remaining > 0) {
    Move best;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i]) continue;
      Move mv;
      mv.pair = false;
      mv.target = i;
      mv.cx = offdiag_count(i);
      mv.singles = 1 + (t.z(i, i) ? 1 : 0);
      if (better(mv, best)) best = mv;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i || !active[j]) continue;
        const bool beta = t.z(i, j);
        if (t.z(j, i) != beta) throw internal_error("Z sub-block not symmetric");
        Move mv;
        mv.pair = true;
        mv.target = i;
        mv.helper = j;
        mv.cx = 1 + offdiag_distance(i, j);
        mv.singles = 1 + (t.z(j, j) != beta ? 1 : 0) + (t.z(i, i) != beta ? 1 : 0);
        if (better(mv, best)) best = mv;
      }
    }

    const std::size_t i = best.target;
    if (best.pair) {
      const std::size_t j = best.helper;
      const bool beta = t.z(i, j);
      if (t.z(j, j) != beta) eng.apply(GateKind::S, j, j, out);
      eng.apply(GateKind::CX, i, j, out);
      t.row_sweep(i, j);
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == i || !t.z(r, i)) continue;
      if (r >= k || !active[r]) throw internal_error("Z entry outside active block");
      eng.apply(GateKind::CZ, i, r, out);
    }
    if (t.z(i, i)) eng.apply(GateKind::S, i, i, out);
    eng.apply(GateKind::H, i, i, out);
    active[i] = false;
    --remaining;
  }
}

// Full pipeline: diagonalize the X block, then clear it via the selected
// Z-update scheme. The returned diagonal operators come from the parallel
// tableau, so entry j is exactly U P_j U^dag for input row j.
inline DiagResult diagonalize(const Tableau& input,
                              const std::vector<double>& angles,
                              DiagMethod method, DiagOptions opts = {}) {
  if (angles.size() != input.rows()) {
    throw data_error("angle count does not match row count");
  }
  DiagResult result;
  result.method = method;
  if (input.rows() == 0) {
    result.circuit = Circuit(static_cast<std::uint32_t>(input.qubits()));
    return result;
  }
  if (!input.mutually_commuting()) {
    throw data_error("not a commuting set");
  }

  DiagEngine eng(input);
  std::vector<Gate> gates;
  const auto [kx, rank] = diagonalize_x(eng, gates);
  result.rank = rank;

  switch (method) {
    case DiagMethod::CZ:
      clear_z_pairwise(eng, rank, opts.phase_stage_first, gates);
      break;
    case DiagMethod::CNot:
      clear_z_cnot(eng, rank, CxResynth::None, 0, gates);
      break;
    case DiagMethod::CNotLog2:
      clear_z_cnot(eng, rank, CxResynth::Log2, opts.block_size, gates);
      break;
    case DiagMethod::CNotBest:
      clear_z_cnot(eng, rank, CxResynth::Best, 0, gates);
      break;
    case DiagMethod::Greedy1:
      clear_z_greedy(eng, rank, false, gates);
      break;
    case DiagMethod::Greedy2:
      clear_z_greedy(eng, rank, true, gates);
      break;
  }

  Circuit circ(static_cast<std::uint32_t>(input.qubits()));
  circ.add_all(gates);
  result.circuit = peephole_cancel(std::move(circ));

  const Tableau& par = eng.parallel();
  result.diag.reserve(par.rows());
  for (std::size_t i = 0; i < par.rows(); ++i) {
    if (par.x_row(i).any()) {
      throw internal_error("parallel tableau X block not cleared");
    }
    result.diag.emplace_back(par.z_row(i), par.sign(i), angles[i]);
  }
  return result;
}

inline DiagResult diagonalize(const std::vector<PauliTerm>& terms,
                              DiagMethod method, DiagOptions opts = {}) {
  Tableau t = Tableau::from_terms(terms);
  std::vector<double> angles;
  angles.reserve(terms.size());
  for (const PauliTerm& term : terms) angles.push_back(term.coeff);
  return diagonalize(t, angles, method, opts);
}

}  // namespace psyn
