// Copyright 2026 The lpa Authors
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

// Brute-force oracles. These deliberately avoid the library's search
// helpers: reachability is closed with Floyd-Warshall, closed paths are
// enumerated as whole walks, closures by intersecting all closed
// supersets, and trace feasibility by basic-solution enumeration.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa::testing {

// Reachability matrix avoiding a forbidden vertex (-1 for none):
// reach[a][b] holds when a walk a -> b exists whose interior avoids
// `forbidden` entirely (endpoints may equal it).
inline std::vector<std::vector<bool>> oracle_reach_avoiding(const Graph& g, int forbidden) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> step(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) step[e.source][e.range] = true;
  std::vector<std::vector<bool>> reach = step;
  for (int k = 0; k < n; ++k) {
    if (k == forbidden) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  }
  return reach;
}

// All first-return walks based at v of length <= max_len, in
// (length, lexicographic edge-id) order, at most `want` of them.
inline std::vector<std::vector<std::string>> oracle_csp_list(const Graph& g, int v,
                                                             std::size_t want,
                                                             std::size_t max_len,
                                                             std::size_t budget = 5'000'000) {
  std::vector<std::vector<std::string>> found;
  auto reach = oracle_reach_avoiding(g, v);
  // out-edges sorted by id so walk extensions come out in lex order
  std::vector<std::vector<int>> outs(g.vertex_count());
  for (int x = 0; x < g.vertex_count(); ++x) {
    outs[x].assign(g.out_edges(x).begin(), g.out_edges(x).end());
    std::sort(outs[x].begin(), outs[x].end(),
              [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
  }
  struct Walk {
    std::vector<int> edges;
    int at;
  };
  std::vector<Walk> frontier{{{}, v}};
  std::size_t spent = 0;
  for (std::size_t len = 1; len <= max_len && found.size() < want && !frontier.empty(); ++len) {
    std::vector<Walk> next;
    for (const Walk& w : frontier) {
      for (int k : outs[w.at]) {
        if (++spent > budget) throw std::runtime_error("oracle budget exceeded");
        int to = g.edge(k).range;
        if (to == v) {
          if (found.size() < want) {
            std::vector<std::string> ids;
            for (int e : w.edges) ids.push_back(g.edge(e).id);
            ids.push_back(g.edge(k).id);
            found.push_back(std::move(ids));
          }
          continue;
        }
        if (!reach[to][v]) continue;  // cannot return anymore
        Walk ext = w;
        ext.edges.push_back(k);
        ext.at = to;
        next.push_back(std::move(ext));
      }
      if (found.size() >= want) break;
    }
    frontier = std::move(next);
  }
  return found;
}

inline std::size_t oracle_csp_walk_bound(const Graph& g) {
  return static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(g.edge_count() + 1);
}

// 0, 1, or 2 meaning "two or more".
inline int oracle_csp_count_class(const Graph& g, int v) {
  return static_cast<int>(oracle_csp_list(g, v, 2, oracle_csp_walk_bound(g)).size());
}

// Definitional subset checks on bitmasks (independent of VertexSet).
inline bool oracle_hereditary(const Graph& g, std::uint64_t mask) {
  for (const Edge& e : g.edges())
    if ((mask >> e.source & 1) && !(mask >> e.range & 1)) return false;
  return true;
}

inline bool oracle_saturated(const Graph& g, std::uint64_t mask) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mask >> v & 1) continue;
    auto outs = g.out_edges(v);
    if (outs.empty()) continue;
    bool all_in = true;
    for (int k : outs)
      if (!(mask >> g.edge(k).range & 1)) all_in = false;
    if (all_in) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> oracle_lattice_masks(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::runtime_error("oracle lattice limited to 20 vertices");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (oracle_hereditary(g, m) && oracle_saturated(g, m)) out.push_back(m);
  return out;
}

// Minimal hereditary saturated superset = intersection of all of them.
inline std::uint64_t oracle_closure_mask(const Graph& g, std::uint64_t x) {
  const int n = g.vertex_count();
  std::uint64_t acc = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m : oracle_lattice_masks(g))
    if ((m & x) == x) acc &= m;
  return acc;
}

// --- exact rational linear algebra, independent of the solver ---

// Row-reduces the augmented system restricted to `cols`; returns the
// unique solution when the columns are independent and consistent.
inline std::optional<std::vector<mpq_class>> oracle_solve_on_support(
    const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b,
    const std::vector<int>& cols) {
  const int m = static_cast<int>(a.size());
  const int s = static_cast<int>(cols.size());
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(s + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < s; ++j) t[i][j] = a[i][cols[j]];
    t[i][s] = b[i];
  }
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < s && rank < m; ++col) {
    int pr = -1;
    for (int i = rank; i < m; ++i)
      if (t[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(t[rank], t[pr]);
    mpq_class p = t[rank][col];
    for (auto& x : t[rank]) x /= p;
    for (int i = 0; i < m; ++i) {
      if (i == rank || t[i][col] == 0) continue;
      mpq_class f = t[i][col];
      for (int j = 0; j <= s; ++j) t[i][j] -= f * t[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int i = rank; i < m; ++i)
    if (t[i][s] != 0) return std::nullopt;  // inconsistent
  if (rank < s) return std::nullopt;        // dependent columns; a smaller support covers it
  std::vector<mpq_class> x(s, 0);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = t[r][s];
  return x;
}

// Is {Ax = b, x >= 0} nonempty? Any nonempty such set has a basic
// feasible solution, so supports of independent columns suffice.
inline bool oracle_feasible(const std::vector<std::vector<mpq_class>>& a,
                            const std::vector<mpq_class>& b, int n) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) cols.push_back(j);
    auto x = oracle_solve_on_support(a, b, cols);
    if (!x) continue;
    bool nonneg = true;
    for (const auto& v : *x)
      if (v < 0) nonneg = false;
    if (nonneg) return true;
  }
  return false;
}

// Does the graph admit a nonzero nonnegative trace (normalized to 1)?
inline bool oracle_trace_exists(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  if (n > 12) throw std::runtime_error("trace oracle limited to 12 vertices");
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (int v = 0; v < n; ++v) {
    if (g.is_sink(v)) continue;
    std::vector<mpq_class> row(n, 0);
    row[v] += 1;
    for (int k : g.out_edges(v)) row[g.edge(k).range] -= 1;
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  a.emplace_back(n, mpq_class(1));
  b.emplace_back(1);
  return oracle_feasible(a, b, n);
}

// Closed formula for the exhaustive corpus size.
inline std::uint64_t oracle_exhaustive_count(int max_vertices, int max_parallel) {
  std::uint64_t total = 0;
  for (int n = 0; n <= max_vertices; ++n) {
    std::uint64_t g = 1;
    for (int i = 0; i < n * n; ++i) g *= static_cast<std::uint64_t>(max_parallel + 1);
    total += g;
  }
  return total;
}

}  // namespace lpa::testing
