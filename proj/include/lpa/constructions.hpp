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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lpa/cycles.hpp"
#include "lpa/graph.hpp"
#include "lpa/hersat.hpp"

namespace lpa {

/// Vertex name given to a first-entry path when it becomes a vertex of
/// the ideal graph.
inline std::string path_vertex_id(const Graph& g, const Path& p) {
  std::string id = "[";
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) id += ".";
    id += g.edge(p.edges[i]).id;
  }
  return id + "]";
}

/// F_E(H): the paths that live outside H until their final edge lands in
/// H. Finite exactly when no cycle outside H reaches H.
struct FSet {
  bool finite = true;
  std::vector<Path> paths;              // full list when finite, (length, lex) order
  std::optional<Path> witness_cycle;    // when infinite: a cycle outside H ...
  std::optional<Path> witness_entry;    // ... with a first-entry path from it into H
};

inline FSet f_set(const Graph& g, const VertexSet& h, std::size_t cap = 1'000'000) {
  // The construction only needs H hereditary; the ideal isomorphism it
  // feeds additionally wants H saturated, which callers check themselves.
  if (!is_hereditary(g, h)) throw PreconditionError("F set requires a hereditary H");
  if (h.none()) throw PreconditionError("F set requires nonempty H");

  FSet out;
  // Entry edges jump from outside H into H; everything before them walks
  // in the quotient graph E/H.
  std::vector<int> entry_edges;
  for (int k = 0; k < g.edge_count(); ++k)
    if (!h.contains(g.edge(k).source) && h.contains(g.edge(k).range)) entry_edges.push_back(k);

  Graph q = quotient_graph(g, h);
  VertexSet entry_sources(q.vertex_count());
  for (int k : entry_edges) entry_sources.add(q.vertex_index(g.vertex_id(g.edge(k).source)));

  VertexSet feeding = co_tree(q, entry_sources);
  if (auto cyc = find_cycle_within(q, feeding)) {
    out.finite = false;
    Path cycle_in_g;
    for (int k : cyc->edges) cycle_in_g.edges.push_back(g.edge_index(q.edge(k).id));
    // Shortest path in the quotient from the cycle to an entry source,
    // then the least entry edge there.
    int from = cyc->source(q);
    std::vector<int> parent(q.vertex_count(), -1);
    std::vector<int> bfs{from};
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (int k : q.out_edges(bfs[i])) {
        int w = q.edge(k).range;
        if (w != from && parent[w] == -1) {
          parent[w] = k;
          bfs.push_back(w);
        }
      }
    int best_entry = -1, best_src = -1;
    for (int k : entry_edges) {
      int src = q.vertex_index(g.vertex_id(g.edge(k).source));
      if (src == from || parent[src] != -1) {
        best_entry = k;
        best_src = src;
        break;
      }
    }
    if (best_entry < 0) throw InternalError("cycle feeds H but no entry path found");
    std::vector<int> rev;
    for (int v = best_src; v != from; v = q.edge(parent[v]).source) rev.push_back(parent[v]);
    Path entry;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it)
      entry.edges.push_back(g.edge_index(q.edge(*it).id));
    entry.edges.push_back(best_entry);
    out.witness_cycle = std::move(cycle_in_g);
    out.witness_entry = std::move(entry);
    return out;
  }

  // The feeding region is acyclic: enumerate all first-entry paths by a
  // memoized walk down the DAG.
  std::vector<std::optional<std::vector<std::vector<int>>>> memo(q.vertex_count());
  std::size_t produced = 0;
  auto down = [&](auto&& self, int x) -> const std::vector<std::vector<int>>& {
    if (memo[x]) return *memo[x];
    std::vector<std::vector<int>> acc;
    int gx = g.vertex_index(q.vertex_id(x));
    for (int k : g.out_edges(gx)) {
      if (h.contains(g.edge(k).range)) {
        acc.push_back({k});
        ++produced;
      } else {
        int y = q.vertex_index(g.vertex_id(g.edge(k).range));
        if (!feeding.contains(y)) continue;
        for (const auto& tail : self(self, y)) {
          std::vector<int> p{k};
          p.insert(p.end(), tail.begin(), tail.end());
          acc.push_back(std::move(p));
          if (++produced > cap) throw ResourceError("F set enumeration cap exceeded");
        }
      }
      if (produced > cap) throw ResourceError("F set enumeration cap exceeded");
    }
    memo[x] = std::move(acc);
    return *memo[x];
  };
  for (int x = 0; x < q.vertex_count(); ++x) {
    if (!feeding.contains(x)) continue;
    for (const auto& p : down(down, x)) out.paths.push_back(Path{p});
  }
  std::sort(out.paths.begin(), out.paths.end(), [&](const Path& a, const Path& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return detail::edge_seq_less(g, a.edges, b.edges);
  });
  return out;
}

/// The ideal graph: H and its first-entry paths as fresh source vertices,
/// each emitting one edge to the path's endpoint in H.
inline Graph h_graph(const Graph& g, const VertexSet& h, std::size_t cap = 1'000'000) {
  FSet f = f_set(g, h, cap);
  if (!f.finite) throw PreconditionError("the F set is infinite; the ideal graph is not materializable");
  std::vector<std::string> vs;
  for (int v : h.members()) vs.push_back(g.vertex_id(v));
  for (const Path& p : f.paths) vs.push_back(path_vertex_id(g, p));
  std::vector<std::array<std::string, 3>> es;
  for (const Edge& e : g.edges())
    if (h.contains(e.source)) es.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
  for (const Path& p : f.paths) {
    std::string pid = path_vertex_id(g, p);
    es.push_back({"~" + pid, pid, g.vertex_id(p.range(g))});
  }
  return Graph::build(std::move(vs), es);
}

namespace detail {

struct SubgraphSets {
  std::vector<bool> verts;
  std::vector<bool> edges;
};

inline SubgraphSets to_sets(const Graph& g, const Graph& sub) {
  if (!is_subgraph_of(sub, g)) throw PreconditionError("not a subgraph of the ambient graph");
  SubgraphSets s{std::vector<bool>(g.vertex_count(), false), std::vector<bool>(g.edge_count(), false)};
  for (const auto& id : sub.vertex_ids()) s.verts[g.vertex_index(id)] = true;
  for (const Edge& e : sub.edges()) s.edges[g.edge_index(e.id)] = true;
  return s;
}

inline Graph from_sets(const Graph& g, const SubgraphSets& s) {
  VertexSet vs(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (s.verts[v]) vs.add(v);
  return make_subgraph(g, vs, s.edges);
}

}  // namespace detail

/// l_E(T): T together with every closed path based at a vertex of T.
/// A vertex or edge joins exactly when it sits in the strongly connected
/// component of some T-vertex.
inline Graph loop_completion(const Graph& g, const Graph& t) {
  auto s = detail::to_sets(g, t);
  SccInfo info = scc(g);
  std::vector<bool> wanted_comp(info.members.size(), false);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (s.verts[v]) wanted_comp[info.component[v]] = true;
  for (std::size_t c = 0; c < info.members.size(); ++c)
    if (wanted_comp[c])
      for (int v : info.members[c]) s.verts[v] = true;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    if (info.component[e.source] == info.component[e.range] && wanted_comp[info.component[e.source]])
      s.edges[k] = true;
  }
  return detail::from_sets(g, s);
}

/// F_e: F plus every edge sharing a source with an edge of F, plus the
/// ranges of those edges. Idempotent; finite whenever F is.
inline Graph exit_completion(const Graph& g, const Graph& f) {
  auto s = detail::to_sets(g, f);
  std::vector<bool> source_active(g.vertex_count(), false);
  for (int k = 0; k < g.edge_count(); ++k)
    if (s.edges[k]) source_active[g.edge(k).source] = true;
  for (int k = 0; k < g.edge_count(); ++k) {
    if (source_active[g.edge(k).source]) {
      s.edges[k] = true;
      s.verts[g.edge(k).range] = true;
    }
  }
  return detail::from_sets(g, s);
}

inline bool is_exit_complete(const Graph& g, const Graph& f) {
  Graph fe = exit_completion(g, f);
  return fe.vertex_count() == f.vertex_count() && fe.edge_count() == f.edge_count();
}

/// The loop/exit completion chain used to trap an element of the algebra
/// inside a manageable subgraph.
struct CompletionChain {
  Graph loop_completed;       // F = l_E(T)
  Graph exit_completed;       // G = F_e
  VertexSet completed_sinks;  // S, the sinks of G (universe: G)
  Graph sink_free_quotient;   // J = G / closure_G(S)
};

inline CompletionChain completion_chain(const Graph& g, const Graph& t) {
  CompletionChain out;
  out.loop_completed = loop_completion(g, t);
  out.exit_completed = exit_completion(g, out.loop_completed);
  out.completed_sinks = sinks(out.exit_completed);
  out.sink_free_quotient =
      quotient_graph(out.exit_completed, closure(out.exit_completed, out.completed_sinks));
  return out;
}

/// An ascending chain of finite subgraphs, each satisfying condition (K)
/// and including completely into the ambient graph.
struct Filtration {
  std::vector<Graph> stages;
};

inline Filtration k_filtration(const Graph& g, int stage_count,
                               std::size_t cycle_cap = kDefaultCycleCap) {
  if (!condition_K(g).holds)
    throw PreconditionError("filtration requires the ambient graph to satisfy condition (K)");
  Filtration out;
  if (g.empty()) {
    out.stages.assign(std::max(stage_count + 1, 1), g);
    return out;
  }

  detail::SubgraphSets cur{std::vector<bool>(g.vertex_count(), false),
                           std::vector<bool>(g.edge_count(), false)};
  cur.verts[0] = true;
  out.stages.push_back(detail::from_sets(g, cur));

  for (int n = 0; n < stage_count; ++n) {
    detail::SubgraphSets next = cur;
    for (int k = 0; k < g.edge_count(); ++k)
      if (cur.verts[g.edge(k).source]) next.edges[k] = true;
    if (n + 1 < g.vertex_count()) next.verts[n + 1] = true;
    for (int k = 0; k < g.edge_count(); ++k)
      if (next.edges[k]) next.verts[g.edge(k).range] = true;

    Graph candidate = detail::from_sets(g, next);

    // Cycles that entered at this stage and still have a unique closed
    // simple path at each of their vertices break condition (K); repair
    // them with a second closed path taken from the ambient graph.
    std::vector<Path> repairs;
    for (const Path& cyc : simple_cycles(candidate, cycle_cap)) {
      bool new_cycle = false;
      for (int k : cyc.edges)
        if (!cur.edges[g.edge_index(candidate.edge(k).id)]) new_cycle = true;
      if (!new_cycle) continue;
      bool all_unique = true;
      for (int k : cyc.edges) {
        int u = candidate.edge(k).source;
        if (csp_class(candidate, u).kind != CspClass::Kind::One) {
          all_unique = false;
          break;
        }
      }
      if (!all_unique) continue;

      // Base the repair at the least vertex of the cycle, rotated there.
      int base_local = candidate.vertex_count();
      std::size_t base_pos = 0;
      for (std::size_t i = 0; i < cyc.edges.size(); ++i) {
        int u = candidate.edge(cyc.edges[i]).source;
        if (u < base_local) {
          base_local = u;
          base_pos = i;
        }
      }
      Path rotated;
      for (std::size_t i = 0; i < cyc.edges.size(); ++i) {
        int k = cyc.edges[(base_pos + i) % cyc.edges.size()];
        rotated.edges.push_back(g.edge_index(candidate.edge(k).id));
      }
      int base = g.vertex_index(candidate.vertex_id(base_local));
      CspClass cls = csp_class(g, base);
      if (cls.kind != CspClass::Kind::TwoOrMore)
        throw InternalError("ambient graph satisfies (K) but no second closed path exists");
      const Path* second = nullptr;
      for (const Path& w : cls.witnesses)
        if (!(w == rotated)) {
          second = &w;
          break;
        }
      if (!second) throw InternalError("no distinct repair path among the witnesses");
      repairs.push_back(*second);
    }

    if (!repairs.empty()) {
      std::vector<bool> repair_vertex(g.vertex_count(), false);
      for (const Path& p : repairs)
        for (int k : p.edges) {
          next.edges[k] = true;
          next.verts[g.edge(k).source] = true;
          next.verts[g.edge(k).range] = true;
          repair_vertex[g.edge(k).source] = true;
          repair_vertex[g.edge(k).range] = true;
        }
      // All exits of the repair paths keep the inclusion complete.
      for (int k = 0; k < g.edge_count(); ++k)
        if (repair_vertex[g.edge(k).source]) {
          next.edges[k] = true;
          next.verts[g.edge(k).range] = true;
        }
      candidate = detail::from_sets(g, next);
    }

    if (!condition_K(candidate).holds)
      throw InternalError("filtration stage fails condition (K)");
    if (!is_complete_inclusion(candidate, g))
      throw InternalError("filtration stage is not a complete inclusion");
    cur = std::move(next);
    out.stages.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace lpa
