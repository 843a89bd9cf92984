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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

using Rational = mpq_class;

/// A graph trace: nonnegative vertex weights with g(v) equal to the sum
/// of g over the out-edge ranges at every emitting vertex. Normalized to
/// norm one by the solver.
struct TraceVector {
  std::vector<Rational> values;  // indexed by declared vertex order
  Rational norm;

  bool satisfies_equalities(const Graph& g) const {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.is_sink(v)) continue;
      Rational sum = 0;
      for (int k : g.out_edges(v)) sum += values[g.edge(k).range];
      if (sum != values[v]) return false;
    }
    for (const Rational& x : values)
      if (x < 0) return false;
    return true;
  }
};

namespace detail {

/// Exact phase-1 simplex with Bland's rule: is {Ax = b, x >= 0} feasible,
/// and if so, at which basic point?
inline std::optional<std::vector<Rational>> rational_feasible(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& c : a[i]) c = -c;
      b[i] = -b[i];
    }
  // Tableau over original columns plus one artificial per row.
  const int cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = b[i];
  }
  // Objective: minimize the artificial sum; reduced costs start as the
  // column sums of the constraint rows.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) t[m][j] += t[i][j];
  for (int i = 0; i < m; ++i) t[m][cols - 1] += t[i][cols - 1];

  std::vector<int> basic(m);
  for (int i = 0; i < m; ++i) basic[i] = n + i;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (t[m][j] > 0) {
        enter = j;
        break;  // Bland: least index
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basic[i] < basic[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return std::nullopt;  // cannot happen: phase-1 objective is bounded
    Rational pivot = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      if (t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basic[leave] = enter;
  }

  if (t[m][cols - 1] != 0) return std::nullopt;  // artificials cannot vanish
  std::vector<Rational> x(n, 0);
  for (int i = 0; i < m; ++i)
    if (basic[i] < n) x[basic[i]] = t[i][cols - 1];
  return x;
}

}  // namespace detail

/// Finds a norm-one graph trace by exact rational feasibility, or
/// reports that the zero trace is the only nonnegative solution.
inline std::optional<TraceVector> trace_solve(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int v = 0; v < n; ++v) {
    if (g.is_sink(v)) continue;
    std::vector<Rational> row(n, 0);
    row[v] += 1;
    for (int k : g.out_edges(v)) row[g.edge(k).range] -= 1;
    a.push_back(std::move(row));
    b.push_back(0);
  }
  a.emplace_back(n, Rational(1));  // norm constraint fixes the scale
  b.push_back(1);
  auto x = detail::rational_feasible(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  TraceVector tv{std::move(*x), Rational(1)};
  return tv;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace lpa
