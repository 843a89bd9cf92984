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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Enumerates every simple cycle (pairwise distinct vertices) as an edge
/// sequence, rooted at its least vertex in declared order. Parallel edges
/// yield distinct cycles. Exceeding `cap` is a hard error, never a
/// truncation.
inline std::vector<Path> simple_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap) {
  std::vector<Path> out;
  const int n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<int> path_edges;

  for (int root = 0; root < n; ++root) {
    // Tiernan-style DFS over vertices >= root; the root is the least
    // vertex of every cycle emitted here.
    struct Frame {
      int v;
      std::size_t pos;
    };
    std::vector<Frame> frames{{root, 0}};
    on_path[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto outs = g.out_edges(f.v);
      if (f.pos < outs.size()) {
        int k = outs[f.pos++];
        int w = g.edge(k).range;
        if (w == root) {
          if (out.size() >= cap)
            throw ResourceError("simple cycle cap (" + std::to_string(cap) + ") exceeded");
          path_edges.push_back(k);
          out.push_back(Path{path_edges});
          path_edges.pop_back();
        } else if (w > root && !on_path[w]) {
          on_path[w] = true;
          path_edges.push_back(k);
          frames.push_back({w, 0});
        }
      } else {
        if (f.v != root) {
          on_path[f.v] = false;
          path_edges.pop_back();
        }
        frames.pop_back();
      }
    }
    on_path[root] = false;
  }
  return out;
}

/// An exit for mu is an edge e != mu_i with s(e) = s(mu_i).
inline bool has_exit(const Graph& g, const Path& cycle) {
  for (int k : cycle.edges)
    if (g.out_degree(g.edge(k).source) > 1) return true;
  return false;
}

/// A closed simple path based at v: s = r = v and the interior never
/// revisits v (interior vertices other than v may repeat).
inline bool is_closed_simple_path(const Graph& g, int v, const Path& p) {
  if (!p.valid(g)) return false;
  if (p.source(g) != v || p.range(g) != v) return false;
  for (std::size_t i = 1; i < p.edges.size(); ++i)
    if (g.edge(p.edges[i]).source == v) return false;
  return true;
}

/// Finds a deterministic cycle inside `allowed`, if any: the first cyclic
/// strongly connected component in condensation order, entered at its
/// least vertex, shortest return first.
inline std::optional<Path> find_cycle_within(const Graph& g, const VertexSet& allowed) {
  Graph h = induced_subgraph(g, allowed);
  SccInfo info = scc(h);
  for (std::size_t c = 0; c < info.members.size(); ++c) {
    if (!info.has_cycle[c]) continue;
    int u = info.members[c].front();
    // BFS from u back to u inside the component; parent edges give the
    // shortest closed path, which visits distinct vertices.
    std::vector<int> parent_edge(h.vertex_count(), -1);
    std::vector<int> queue{u};
    int closing = -1;
    for (std::size_t qi = 0; qi < queue.size() && closing < 0; ++qi) {
      int v = queue[qi];
      for (int k : h.out_edges(v)) {
        int w = h.edge(k).range;
        if (info.component[w] != static_cast<int>(c)) continue;
        if (w == u) {
          closing = k;
          break;
        }
        if (parent_edge[w] == -1) {
          parent_edge[w] = k;
          queue.push_back(w);
        }
      }
    }
    std::vector<int> rev{closing};
    int v = h.edge(closing).source;
    while (v != u) {
      rev.push_back(parent_edge[v]);
      v = h.edge(parent_edge[v]).source;
    }
    Path p;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it)
      p.edges.push_back(g.edge_index(h.edge(*it).id));
    return p;
  }
  return std::nullopt;
}

struct ConditionLResult {
  bool holds = true;
  std::optional<Path> exitless_cycle;
};

/// Condition (L): every cycle has an exit. A cycle is exitless exactly
/// when each of its vertices emits a single edge, so it suffices to chase
/// unique out-edges.
inline ConditionLResult condition_L(const Graph& g) {
  const int n = g.vertex_count();
  // color: 0 unvisited, 1 on current chase, 2 done
  std::vector<int> color(n, 0);
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0 || g.out_degree(start) != 1) continue;
    std::vector<int> chain;
    int v = start;
    while (color[v] == 0 && g.out_degree(v) == 1) {
      color[v] = 1;
      chain.push_back(v);
      v = g.edge(g.out_edges(v)[0]).range;
    }
    if (color[v] == 1 && g.out_degree(v) == 1) {
      // v closes a cycle of out-degree-1 vertices
      Path cycle;
      bool in_cycle = false;
      for (int u : chain) {
        if (u == v) in_cycle = true;
        if (in_cycle) cycle.edges.push_back(g.out_edges(u)[0]);
      }
      return {false, cycle};
    }
    for (int u : chain) color[u] = 2;
  }
  return {};
}

/// Three-valued cardinality of CSP_E(v) with up to two witnesses.
struct CspClass {
  enum class Kind { Zero, One, TwoOrMore };
  Kind kind = Kind::Zero;
  std::vector<Path> witnesses;
};

inline const char* to_string(CspClass::Kind k) {
  switch (k) {
    case CspClass::Kind::Zero: return "zero";
    case CspClass::Kind::One: return "one";
    default: return "two_or_more";
  }
}

namespace detail {

// Out-edge indices sorted by edge id string; intrinsic order so that the
// same walk enumeration runs identically on a subgraph.
inline std::vector<std::vector<int>> out_edges_by_id(const Graph& g) {
  std::vector<std::vector<int>> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    out[v].assign(g.out_edges(v).begin(), g.out_edges(v).end());
    std::sort(out[v].begin(), out[v].end(),
              [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
  }
  return out;
}

inline bool edge_seq_less(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::string> sa, sb;
  for (int k : a) sa.push_back(g.edge(k).id);
  for (int k : b) sb.push_back(g.edge(k).id);
  return sa < sb;
}

}  // namespace detail

/// First-return closed paths based at v, in (length, lex-by-edge-id)
/// order, at most `want` of them; length capped at `max_len`. Internal
/// vertices other than v may repeat. Used for witness extraction.
inline std::vector<Path> csp_enumerate(const Graph& g, int v, std::size_t want,
                                       std::size_t max_len, std::size_t budget = 4'000'000) {
  std::vector<Path> found;
  // Vertices (other than v) that still reach v without passing through v:
  // co-reachability in the graph with v's out-edges removed.
  VertexSet back(g.vertex_count());
  {
    std::vector<int> stack{v};
    back.add(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int k : g.in_edges(x)) {
        int w = g.edge(k).source;
        if (w == v || back.contains(w)) continue;  // do not cross v
        back.add(w);
        stack.push_back(w);
      }
    }
  }
  auto sorted_out = detail::out_edges_by_id(g);
  std::size_t spent = 0;
  for (std::size_t len = 1; len <= max_len && found.size() < want; ++len) {
    // DFS emitting first-return walks of exactly `len` edges, lex order.
    struct Frame {
      int vert;
      std::size_t pos;
    };
    std::vector<Frame> frames{{v, 0}};
    std::vector<int> walk;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (++spent > budget) throw ResourceError("closed-path witness search budget exceeded");
      auto& outs = sorted_out[f.vert];
      if (f.pos < outs.size() && found.size() < want) {
        int k = outs[f.pos++];
        int w = g.edge(k).range;
        if (walk.size() + 1 == len) {
          if (w == v) {
            walk.push_back(k);
            found.push_back(Path{walk});
            walk.pop_back();
          }
        } else if (w != v && back.contains(w)) {
          walk.push_back(k);
          frames.push_back({w, 0});
        }
      } else {
        if (frames.size() > 1) walk.pop_back();
        frames.pop_back();
      }
    }
  }
  return found;
}

/// Classifies card(CSP_E(v)) as 0, 1 or >= 2 in polynomial time, with
/// witnesses. The vertex is split into an out-copy and an in-copy; the
/// class is read off the region between them: a cycle there pumps
/// infinitely many closed paths, otherwise the region is a DAG whose
/// first-return paths are counted exactly (capped at two).
inline CspClass csp_class(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  const int n = g.vertex_count();

  int loops = 0;
  for (int k : g.out_edges(v))
    if (g.edge(k).range == v) ++loops;

  // Middle region: vertices != v, edges avoiding v on both ends.
  VertexSet fwd(n);  // reachable from v's out-edges without re-entering v
  {
    std::vector<int> stack;
    for (int k : g.out_edges(v)) {
      int w = g.edge(k).range;
      if (w != v && !fwd.contains(w)) {
        fwd.add(w);
        stack.push_back(w);
      }
    }
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int k : g.out_edges(x)) {
        int w = g.edge(k).range;
        if (w == v || fwd.contains(w)) continue;
        fwd.add(w);
        stack.push_back(w);
      }
    }
  }
  VertexSet bwd(n);  // co-reaches v's in-edges without crossing v
  {
    std::vector<int> stack;
    for (int k : g.in_edges(v)) {
      int w = g.edge(k).source;
      if (w != v && !bwd.contains(w)) {
        bwd.add(w);
        stack.push_back(w);
      }
    }
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int k : g.in_edges(x)) {
        int w = g.edge(k).source;
        if (w == v || bwd.contains(w)) continue;
        bwd.add(w);
        stack.push_back(w);
      }
    }
  }
  VertexSet region = fwd.set_intersection(bwd);

  bool region_cycle = false;
  if (!region.none()) {
    Graph mid = induced_subgraph(g, region);
    region_cycle = !is_acyclic(mid);
  }

  const std::size_t max_len =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(g.edge_count() + 1);

  if (region_cycle) {
    CspClass c;
    c.kind = CspClass::Kind::TwoOrMore;
    c.witnesses = csp_enumerate(g, v, 2, max_len);
    if (c.witnesses.size() != 2) throw InternalError("cycle in return region but < 2 closed paths found");
    return c;
  }

  // DAG count, capped at 2. ways[x] = first-return suffix count from x.
  std::vector<int> ways(n, 0);
  std::vector<int> order = region.members();
  // reverse-topological order of the region DAG
  if (!order.empty()) {
    Graph mid = induced_subgraph(g, region);
    SccInfo info = scc(mid);
    order.clear();
    for (auto it = info.members.rbegin(); it != info.members.rend(); ++it)
      for (int x : *it) order.push_back(g.vertex_index(mid.vertex_id(x)));
  }
  auto cap2 = [](int a) { return a > 2 ? 2 : a; };
  for (int x : order) {
    int total = 0;
    for (int k : g.out_edges(x)) {
      int w = g.edge(k).range;
      if (w == v) total += 1;
      else if (region.contains(w)) total += ways[w];
      total = cap2(total);
    }
    ways[x] = total;
  }
  int total = cap2(loops);
  for (int k : g.out_edges(v)) {
    int w = g.edge(k).range;
    if (w != v && region.contains(w)) total = cap2(total + ways[w]);
  }

  CspClass c;
  if (total == 0) {
    c.kind = CspClass::Kind::Zero;
  } else if (total == 1) {
    c.kind = CspClass::Kind::One;
    c.witnesses = csp_enumerate(g, v, 1, max_len);
    if (c.witnesses.size() != 1) throw InternalError("unique closed path not recovered");
  } else {
    c.kind = CspClass::Kind::TwoOrMore;
    c.witnesses = csp_enumerate(g, v, 2, max_len);
    if (c.witnesses.size() != 2) throw InternalError("second closed path not recovered");
  }
  return c;
}

inline CspClass csp_class(const Graph& g, const std::string& v) {
  return csp_class(g, g.vertex_index(v));
}

struct ConditionKResult {
  bool holds = true;
  std::optional<int> witness_vertex;  // a vertex with exactly one closed simple path
  std::optional<Path> unique_csp;
};

/// Condition (K): every vertex lying on a closed simple path is the base
/// of at least two distinct ones.
inline ConditionKResult condition_K(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    CspClass c = csp_class(g, v);
    if (c.kind == CspClass::Kind::One) return {false, v, c.witnesses.front()};
  }
  return {};
}

}  // namespace lpa
