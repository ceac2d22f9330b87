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
#include <numeric>
#include <string>
#include <vector>

#include "psyn/bitmat.hpp"
#include "psyn/common.hpp"
#include "psyn/pauli.hpp"
#include "psyn/tableau.hpp"

namespace psyn {

enum class PartitionStrategy { Sequential, LargestFirst, IndependentSet };

inline const char* partition_strategy_name(PartitionStrategy s) {
  switch (s) {
    case PartitionStrategy::Sequential:
      return "sequential";
    case PartitionStrategy::LargestFirst:
      return "largest-first";
    case PartitionStrategy::IndependentSet:
      return "independent-set";
  }
  return "?";
}

inline PartitionStrategy partition_strategy_from_name(const std::string& s) {
  if (s == "sequential") return PartitionStrategy::Sequential;
  if (s == "largest-first") return PartitionStrategy::LargestFirst;
  if (s == "independent-set") return PartitionStrategy::IndependentSet;
  throw data_error("unknown partition strategy: " + s);
}

struct Partition {
  std::vector<std::vector<std::size_t>> sets;  // index sets into the input
  PartitionStrategy strategy = PartitionStrategy::Sequential;
};

// Adjacency rows of the non-commutation graph: bit j of row i is set iff
// terms i and j anticommute.
inline std::vector<Bits> commutation_graph(const std::vector<PauliTerm>& terms) {
  const Tableau t = Tableau::from_terms(terms);
  std::vector<Bits> adj(terms.size(), Bits(terms.size()));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!t.commutes(i, j)) {
        adj[i].set(j, true);
        adj[j].set(i, true);
      }
    }
  }
  return adj;
}

namespace detail {

inline void verify_partition(const Partition& p,
                             const std::vector<PauliTerm>& terms) {
  const Tableau t = Tableau::from_terms(terms);
  std::vector<bool> covered(terms.size(), false);
  for (const auto& set : p.sets) {
    for (std::size_t a = 0; a < set.size(); ++a) {
      if (covered[set[a]]) throw internal_error("partition sets overlap");
      covered[set[a]] = true;
      for (std::size_t b = a + 1; b < set.size(); ++b) {
        if (!t.commutes(set[a], set[b])) {
          throw internal_error("partition set is not commuting");
        }
      }
    }
  }
  for (bool c : covered) {
    if (!c) throw internal_error("partition does not cover all terms");
  }
}

}  // namespace detail

// Greedy first-fit in input order; no graph is built.
inline Partition partition_sequential(const std::vector<PauliTerm>& terms) {
  Partition p;
  p.strategy = PartitionStrategy::Sequential;
  const Tableau t = Tableau::from_terms(terms);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool placed = false;
    for (auto& set : p.sets) {
      bool ok = true;
      for (std::size_t member : set) {
        if (!t.commutes(i, member)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        set.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) p.sets.push_back({i});
  }
  detail::verify_partition(p, terms);
  return p;
}

// Greedy coloring of the non-commutation graph; each color class is a
// commuting set. largest-first: vertices by descending degree (ties by
// index), smallest free color. independent-set: repeatedly peel a maximal
// independent set, picking the lowest-degree eligible vertex of the residual
// graph at every step.
inline Partition partition_coloring(const std::vector<PauliTerm>& terms,
                                    PartitionStrategy strategy) {
  if (strategy == PartitionStrategy::Sequential) {
    return partition_sequential(terms);
  }
  const std::size_t m = terms.size();
  const std::vector<Bits> adj = commutation_graph(terms);
  Partition p;
  p.strategy = strategy;

  if (strategy == PartitionStrategy::LargestFirst) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> degree(m);
    for (std::size_t i = 0; i < m; ++i) degree[i] = adj[i].popcount();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return degree[a] > degree[b];
                     });
    std::vector<int> color(m, -1);
    int max_color = -1;
    for (std::size_t v : order) {
      std::vector<bool> used(static_cast<std::size_t>(max_color) + 2, false);
      for (std::size_t u = 0; u < m; ++u) {
        if (adj[v].get(u) && color[u] >= 0) used[color[u]] = true;
      }
      int c = 0;
      while (used[c]) ++c;
      color[v] = c;
      max_color = std::max(max_color, c);
      if (c >= static_cast<int>(p.sets.size())) p.sets.resize(c + 1);
      p.sets[c].push_back(v);
    }
  } else {
    std::vector<bool> removed(m, false);
    std::size_t left = m;
    while (left > 0) {
      std::vector<bool> eligible = removed;  // true = not eligible
      std::vector<std::size_t> chosen;
      while (true) {
        std::size_t best = m;
        std::size_t best_deg = 0;
        for (std::size_t v = 0; v < m; ++v) {
          if (eligible[v]) continue;
          std::size_t deg = 0;
          for (std::size_t u = 0; u < m; ++u) {
            if (!eligible[u] && adj[v].get(u)) ++deg;
          }
          if (best == m || deg < best_deg) {
            best = v;
            best_deg = deg;
          }
        }
        if (best == m) break;
        chosen.push_back(best);
        eligible[best] = true;
        for (std::size_t u = 0; u < m; ++u) {
          if (adj[best].get(u)) eligible[u] = true;
        }
      }
      std::sort(chosen.begin(), chosen.end());
      p.sets.push_back(chosen);
      for (std::size_t v : chosen) {
        removed[v] = true;
        --left;
      }
    }
  }

  detail::verify_partition(p, terms);
  return p;
}

inline Partition make_partition(const std::vector<PauliTerm>& terms,
                                PartitionStrategy strategy) {
  if (strategy == PartitionStrategy::Sequential) {
    return partition_sequential(terms);
  }
  return partition_coloring(terms, strategy);
}

}  // namespace psyn
