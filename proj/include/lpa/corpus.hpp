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

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

namespace detail {

inline Graph graph_from_counts(int n, const std::vector<int>& counts) {
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<std::array<std::string, 3>> es;
  int edge_no = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < counts[i * n + j]; ++c)
        es.push_back({"e" + std::to_string(edge_no++), vs[i], vs[j]});
  return Graph::build(std::move(vs), es);
}

}  // namespace detail

/// Every multigraph with at most `max_vertices` vertices and at most
/// `max_parallel` edges per ordered vertex pair, in a fixed enumeration
/// order. The stream is deterministic; vertices are named v0, v1, ...
template <typename Fn>
inline void exhaustive_corpus_for_each(int max_vertices, int max_parallel, Fn&& fn) {
  for (int n = 0; n <= max_vertices; ++n) {
    std::vector<int> counts(static_cast<std::size_t>(n) * n, 0);
    for (;;) {
      fn(detail::graph_from_counts(n, counts));
      // mixed-radix increment over the pair counts
      std::size_t pos = 0;
      while (pos < counts.size() && counts[pos] == max_parallel) counts[pos++] = 0;
      if (pos == counts.size()) break;
      ++counts[pos];
    }
  }
}

inline std::vector<Graph> exhaustive_corpus(int max_vertices, int max_parallel) {
  std::vector<Graph> out;
  exhaustive_corpus_for_each(max_vertices, max_parallel, [&](Graph g) { out.push_back(std::move(g)); });
  return out;
}

/// A reproducible pseudorandom stream: `count` graphs with 1 to
/// `max_vertices` vertices; each ordered pair draws its parallel edge
/// count from the skewed table {0,0,0,1,1,2} clipped to `max_parallel`.
template <typename Fn>
inline void seeded_corpus_for_each(std::uint64_t seed, int count, int max_vertices, int max_parallel,
                                   Fn&& fn) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
    std::vector<int> counts(static_cast<std::size_t>(n) * n, 0);
    for (auto& c : counts) {
      std::uint64_t r = rng() % 6;
      int k = r < 3 ? 0 : (r < 5 ? 1 : 2);
      c = std::min(k, max_parallel);
    }
    fn(detail::graph_from_counts(n, counts));
  }
}

inline std::vector<Graph> seeded_corpus(std::uint64_t seed, int count, int max_vertices,
                                        int max_parallel) {
  std::vector<Graph> out;
  seeded_corpus_for_each(seed, count, max_vertices, max_parallel,
                         [&](Graph g) { out.push_back(std::move(g)); });
  return out;
}

}  // namespace lpa
