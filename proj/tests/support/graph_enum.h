// Copyright 2026 The SlangLex Authors.
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

// Enumeration of connected simple graphs up to isomorphism, for small n.
// Graphs are adjacency bitmasks: bit j of rows[i] set iff i~j.

#ifndef SLANGLEX_TESTS_GRAPH_ENUM_H_
#define SLANGLEX_TESTS_GRAPH_ENUM_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace slanglex::testing {

struct SmallGraph {
  int n = 0;
  std::array<std::uint8_t, 8> rows{};

  bool adjacent(int a, int b) const { return (rows[a] >> b) & 1; }
  bool operator<(const SmallGraph& o) const {
    return n != o.n ? n < o.n : rows < o.rows;
  }
};

namespace graph_enum_detail {

// Upper-triangle bit string under a permutation; smaller is canonical.
inline std::uint64_t code(const SmallGraph& g, const std::array<int, 8>& perm) {
  std::uint64_t c = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) c = (c << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
  }
  return c;
}

// Colour refinement by neighbour-colour multisets, then brute force over
// orderings that respect the colour classes.
inline SmallGraph canonical(const SmallGraph& g) {
  std::vector<int> colour(g.n, 0);
  for (int round = 0; round < g.n; ++round) {
    std::vector<std::vector<int>> signature(g.n);
    for (int v = 0; v < g.n; ++v) {
      signature[v].push_back(colour[v]);
      std::vector<int> around;
      for (int u = 0; u < g.n; ++u) {
        if (g.adjacent(v, u)) around.push_back(colour[u]);
      }
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct(signature.begin(), signature.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v) {
      next[v] = int(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                    distinct.begin());
    }
    if (next == colour) break;
    colour = next;
  }
  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + g.n, 0);
  std::sort(perm.begin(), perm.begin() + g.n,
            [&](int a, int b) { return colour[a] != colour[b] ? colour[a] < colour[b] : a < b; });
  // Permute inside each colour class only.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < g.n;) {
    int j = i;
    while (j < g.n && colour[perm[j]] == colour[perm[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::array<int, 8> best_perm = perm;
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == classes.size()) {
      const std::uint64_t c = code(g, perm);
      if (c < best) {
        best = c;
        best_perm = perm;
      }
      return;
    }
    auto [lo, hi] = classes[k];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      self(self, k + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  search(search, 0);
  SmallGraph out;
  out.n = g.n;
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      if (g.adjacent(best_perm[i], best_perm[j])) out.rows[i] |= std::uint8_t(1u << j);
    }
  }
  return out;
}

inline bool connected(const SmallGraph& g) {
  if (g.n == 0) return false;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.n; ++v) {
      if ((frontier >> v) & 1) next |= g.rows[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << g.n) - 1;
}

}  // namespace graph_enum_detail

// All graphs (connected or not) on exactly n nodes, one per isomorphism class,
// built by attaching a new vertex to every graph on n-1 nodes.
inline std::vector<std::set<SmallGraph>> all_graphs_up_to(int max_n) {
  std::vector<std::set<SmallGraph>> by_size(max_n + 1);
  by_size[0].insert(SmallGraph{});
  for (int n = 1; n <= max_n; ++n) {
    for (const SmallGraph& base : by_size[n - 1]) {
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        SmallGraph g = base;
        g.n = n;
        g.rows[n - 1] = std::uint8_t(mask);
        for (int i = 0; i < n - 1; ++i) {
          if ((mask >> i) & 1) g.rows[i] |= std::uint8_t(1u << (n - 1));
        }
        by_size[n].insert(graph_enum_detail::canonical(g));
      }
    }
  }
  return by_size;
}

inline std::vector<SmallGraph> connected_graphs_up_to(int max_n) {
  std::vector<SmallGraph> out;
  for (const auto& level : all_graphs_up_to(max_n)) {
    for (const SmallGraph& g : level) {
      if (graph_enum_detail::connected(g)) out.push_back(g);
    }
  }
  return out;
}

}  // namespace slanglex::testing

#endif  // SLANGLEX_TESTS_GRAPH_ENUM_H_
