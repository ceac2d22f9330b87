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
#include <string>
#include <vector>

#include "psyn/circuit.hpp"
#include "psyn/common.hpp"
#include "psyn/diagonalize.hpp"
#include "psyn/ordering.hpp"
#include "psyn/pauli.hpp"
#include "psyn/rng.hpp"
#include "psyn/tableau.hpp"

namespace psyn {

struct OrderingStrategy {
  enum class Kind { Base, Opt, Rnd };
  Kind kind = Kind::Opt;
  std::vector<std::uint32_t> qubit_order;  // opt only; empty = canonical
  int trials = 100;                        // rnd only
  std::uint64_t seed = 0;                  // rnd only

  static OrderingStrategy base() { return {Kind::Base, {}, 100, 0}; }
  static OrderingStrategy opt() { return {Kind::Opt, {}, 100, 0}; }
  static OrderingStrategy rnd(int trials, std::uint64_t seed) {
    OrderingStrategy s;
    s.kind = Kind::Rnd;
    s.trials = trials;
    s.seed = seed;
    return s;
  }
};

inline const char* ordering_kind_name(OrderingStrategy::Kind k) {
  switch (k) {
    case OrderingStrategy::Kind::Base:
      return "base";
    case OrderingStrategy::Kind::Opt:
      return "opt";
    case OrderingStrategy::Kind::Rnd:
      return "rnd";
  }
  return "?";
}

namespace detail {

// Controlled global phase: diag(1, e^{i theta}) on the control qubit,
// written as an RZ plus a recorded global phase.
inline void add_controlled_phase(Circuit& c, std::uint32_t control,
                                 double theta) {
  c.add(Gate::rz(control, -theta / 2.0));
  c.global_phase += theta / 2.0;
}

}  // namespace detail

// Parity-ladder exponentiation of ordered diagonal terms on an ancilla
// (qubit n, assumed |0>). Consecutive ladders share their common support, so
// the CX count equals exp_cx_cost of the ordered list. All-identity terms
// fold into the global phase. With `controlled` every rotation is wrapped in
// a control on one extra qubit (index n+1).
inline Circuit build_exponentiation_circuit(
    const std::vector<DiagonalTerm>& ordered, std::size_t n,
    bool controlled = false) {
  Circuit c(static_cast<std::uint32_t>(n + 1 + (controlled ? 1 : 0)));
  c.uses_ancilla = true;
  const std::uint32_t anc = static_cast<std::uint32_t>(n);
  const std::uint32_t ctl = static_cast<std::uint32_t>(n + 1);

  Bits on_ladder(n);
  for (const DiagonalTerm& t : ordered) {
    if (t.num_qubits() != n) throw data_error("diagonal term of wrong width");
    if (t.is_identity()) {
      if (controlled) {
        detail::add_controlled_phase(c, ctl, t.effective_angle());
      } else {
        c.global_phase += t.effective_angle();
      }
      continue;
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (on_ladder.get(q) != t.zmask.get(q)) {
        c.add(Gate::cx(static_cast<std::uint32_t>(q), anc));
        ++c.exp_cx;
      }
    }
    on_ladder = t.zmask;
    if (controlled) {
      c.add(Gate::crz(ctl, anc, t.effective_angle()));
    } else {
      c.add(Gate::rz(anc, t.effective_angle()));
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (on_ladder.get(q)) {
      c.add(Gate::cx(static_cast<std::uint32_t>(q), anc));
      ++c.exp_cx;
    }
  }
  return c;
}

namespace detail {

inline std::vector<DiagonalTerm> pick_ordering(
    const std::vector<DiagonalTerm>& diag, std::size_t n,
    const OrderingStrategy& strategy) {
  switch (strategy.kind) {
    case OrderingStrategy::Kind::Base:
      return diag;
    case OrderingStrategy::Kind::Opt: {
      const auto order = strategy.qubit_order.empty()
                             ? canonical_qubit_order(n)
                             : strategy.qubit_order;
      return order_terms(diag, order);
    }
    case OrderingStrategy::Kind::Rnd: {
      if (strategy.trials < 1) throw data_error("rnd needs at least one trial");
      Rng rng(strategy.seed);
      std::vector<DiagonalTerm> best;
      std::size_t best_cost = 0;
      for (int trial = 0; trial < strategy.trials; ++trial) {
        auto order = canonical_qubit_order(n);
        if (trial > 0) rng.shuffle(order.begin(), order.end());
        std::vector<DiagonalTerm> cand = order_terms(diag, order);
        const std::size_t cost = exp_cx_cost(cand);
        if (trial == 0 || cost < best_cost) {
          best = std::move(cand);
          best_cost = cost;
        }
      }
      return best;
    }
  }
  return diag;
}

}  // namespace detail

// U, the ordered diagonal exponentials on the ancilla, then U^dag.
inline Circuit build_simulation_circuit(const std::vector<PauliTerm>& terms,
                                        DiagMethod method,
                                        const OrderingStrategy& strategy,
                                        DiagOptions opts = {},
                                        bool controlled = false) {
  if (terms.empty()) return Circuit(0);
  const std::size_t n = terms.front().num_qubits();

  const DiagResult dr = diagonalize(terms, method, opts);
  const std::vector<DiagonalTerm> ordered =
      detail::pick_ordering(dr.diag, n, strategy);
  const Circuit core = build_exponentiation_circuit(ordered, n, controlled);

  Circuit c(core.n_qubits);
  c.uses_ancilla = true;
  c.add_all(dr.circuit.gates);
  c.add_all(core.gates);
  c.global_phase += core.global_phase;
  c.exp_cx = core.exp_cx;
  c.add_all(dr.circuit.adjoint().gates);
  return c;
}

namespace detail {

inline std::size_t basis_gate_count(char letter) {
  if (letter == 'X') return 1;  // H
  if (letter == 'Y') return 2;  // S, H
  return 0;
}

inline std::size_t support_size(const PauliTerm& t) {
  std::size_t s = 0;
  for (char c : t.letters) {
    if (c != 'I') ++s;
  }
  return s;
}

// Marginal cost of appending `next` after `prev` (nullptr for the first
// term): letters matching the previous term share their ladder legs and
// basis changes.
inline std::pair<std::size_t, std::size_t> append_cost(const PauliTerm* prev,
                                                       const PauliTerm& next) {
  std::size_t cx = 2 * support_size(next);
  std::size_t singles = 0;
  for (char c : next.letters) singles += 2 * basis_gate_count(c);
  if (prev != nullptr) {
    for (std::size_t q = 0; q < next.letters.size(); ++q) {
      const char a = prev->letters[q];
      if (a != 'I' && a == next.letters[q]) {
        cx -= 2;
        singles -= 2 * basis_gate_count(a);
      }
    }
  }
  return {cx, singles};
}

inline std::vector<std::size_t> greedy_direct_order(
    const std::vector<PauliTerm>& terms, const std::vector<std::size_t>& seed_order) {
  std::vector<std::size_t> out;
  std::vector<bool> used(terms.size(), false);
  const PauliTerm* prev = nullptr;
  for (std::size_t step = 0; step < terms.size(); ++step) {
    std::size_t best = terms.size();
    std::pair<std::size_t, std::size_t> best_cost{0, 0};
    for (std::size_t idx : seed_order) {
      if (used[idx]) continue;
      const auto cost = append_cost(prev, terms[idx]);
      if (best == terms.size() || cost < best_cost) {
        best = idx;
        best_cost = cost;
      }
    }
    used[best] = true;
    out.push_back(best);
    prev = &terms[best];
  }
  return out;
}

}  // namespace detail

// Direct per-term exponentiation: basis changes (H for X; S,H for Y with the
// angle negated per Y), a CX parity ladder onto the ancilla, the rotation,
// and the uncomputation. Adjacent terms keep shared legs of the ladder in
// place, which is exactly the block cancellation the peephole pass cannot
// see across the ancilla. Non-commuting inputs are exponentiated in the
// order given; reordering is only applied when all terms commute.
inline Circuit build_direct_circuit(const std::vector<PauliTerm>& terms,
                                    const OrderingStrategy& strategy,
                                    bool controlled = false) {
  if (terms.empty()) return Circuit(0);
  const std::size_t n = terms.front().num_qubits();
  const std::uint32_t anc = static_cast<std::uint32_t>(n);
  const std::uint32_t ctl = static_cast<std::uint32_t>(n + 1);

  const bool commuting = Tableau::from_terms(terms).mutually_commuting();

  std::vector<std::size_t> identity_order(terms.size());
  std::iota(identity_order.begin(), identity_order.end(), std::size_t{0});

  std::vector<std::size_t> order = identity_order;
  if (commuting && strategy.kind != OrderingStrategy::Kind::Base) {
    order = detail::greedy_direct_order(terms, identity_order);
  }

  const auto build = [&](const std::vector<std::size_t>& seq) {
    Circuit c(static_cast<std::uint32_t>(n + 1 + (controlled ? 1 : 0)));
    c.uses_ancilla = true;
    std::string basis(n, 'I');  // letter currently riding the ladder, per qubit
    const auto leave = [&](std::size_t q) {
      c.add(Gate::cx(static_cast<std::uint32_t>(q), anc));
      if (basis[q] == 'X') {
        c.add(Gate::h(static_cast<std::uint32_t>(q)));
      } else if (basis[q] == 'Y') {
        c.add(Gate::h(static_cast<std::uint32_t>(q)));
        c.add(Gate::sdg(static_cast<std::uint32_t>(q)));
      }
      basis[q] = 'I';
    };
    for (std::size_t idx : seq) {
      const PauliTerm& t = terms[idx];
      if (t.is_identity()) {
        if (controlled) {
          detail::add_controlled_phase(c, ctl, t.coeff);
        } else {
          c.global_phase += t.coeff;
        }
        continue;
      }
      std::size_t y_count = 0;
      for (std::size_t q = 0; q < n; ++q) {
        if (t.letters[q] == 'Y') ++y_count;
        if (basis[q] != 'I' && basis[q] != t.letters[q]) leave(q);
      }
      for (std::size_t q = 0; q < n; ++q) {
        if (t.letters[q] == 'I' || basis[q] == t.letters[q]) continue;
        if (t.letters[q] == 'X') {
          c.add(Gate::h(static_cast<std::uint32_t>(q)));
        } else if (t.letters[q] == 'Y') {
          c.add(Gate::s(static_cast<std::uint32_t>(q)));
          c.add(Gate::h(static_cast<std::uint32_t>(q)));
        }
        c.add(Gate::cx(static_cast<std::uint32_t>(q), anc));
        basis[q] = t.letters[q];
      }
      const double angle = (y_count % 2 == 0) ? t.coeff : -t.coeff;
      if (controlled) {
        c.add(Gate::crz(ctl, anc, angle));
      } else {
        c.add(Gate::rz(anc, angle));
      }
    }
    for (std::size_t q = n; q-- > 0;) {
      if (basis[q] != 'I') leave(q);
    }
    c = peephole_cancel(std::move(c));
    c.exp_cx = circuit_stats(c).cnot_count;
    return c;
  };

  if (commuting && strategy.kind == OrderingStrategy::Kind::Rnd) {
    if (strategy.trials < 1) throw data_error("rnd needs at least one trial");
    Rng rng(strategy.seed);
    Circuit best = build(order);
    std::size_t best_cx = circuit_stats(best).cnot_count;
    for (int trial = 1; trial < strategy.trials; ++trial) {
      std::vector<std::size_t> shuffled = identity_order;
      rng.shuffle(shuffled.begin(), shuffled.end());
      const Circuit cand = build(detail::greedy_direct_order(terms, shuffled));
      const std::size_t cx = circuit_stats(cand).cnot_count;
      if (cx < best_cx) {
        best = cand;
        best_cx = cx;
      }
    }
    return best;
  }
  return build(order);
}

}  // namespace psyn
