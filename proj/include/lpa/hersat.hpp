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

#include <optional>
#include <string>
#include <vector>

#include "lpa/cycles.hpp"
#include "lpa/graph.hpp"

namespace lpa {

inline constexpr int kDefaultLatticeCap = 24;

/// v in S and v >= w imply w in S; edgewise, every edge leaving S's
/// members stays inside S.
inline bool is_hereditary(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw PreconditionError("vertex set universe mismatch");
  if (s.cached_hereditary) return *s.cached_hereditary;
  bool ok = true;
  for (int k = 0; k < g.edge_count() && ok; ++k) {
    const Edge& e = g.edge(k);
    if (s.contains(e.source) && !s.contains(e.range)) ok = false;
  }
  s.cached_hereditary = ok;
  return ok;
}

/// Every vertex that emits edges and feeds only into S is already in S.
inline bool is_saturated(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw PreconditionError("vertex set universe mismatch");
  if (s.cached_saturated) return *s.cached_saturated;
  bool ok = true;
  for (int v = 0; v < g.vertex_count() && ok; ++v) {
    if (s.contains(v) || g.is_sink(v)) continue;
    bool all_in = true;
    for (int k : g.out_edges(v))
      if (!s.contains(g.edge(k).range)) {
        all_in = false;
        break;
      }
    if (all_in) ok = false;
  }
  s.cached_saturated = ok;
  return ok;
}

inline bool in_lattice(const Graph& g, const VertexSet& s) {
  return is_hereditary(g, s) && is_saturated(g, s);
}

/// One saturation step: S plus every emitting vertex whose out-edge
/// ranges all lie in S.
inline VertexSet lambda_step(const Graph& g, const VertexSet& s) {
  VertexSet r = s;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (r.contains(v) || g.is_sink(v)) continue;
    bool all_in = true;
    for (int k : g.out_edges(v))
      if (!s.contains(g.edge(k).range)) {
        all_in = false;
        break;
      }
    if (all_in) r.add(v);
  }
  return r;
}

/// Hereditary saturated closure: the tree of X followed by the
/// saturation fixpoint, reached in at most |E0| steps.
inline VertexSet closure(const Graph& g, const VertexSet& x) {
  VertexSet cur = tree(g, x);
  for (;;) {
    VertexSet next = lambda_step(g, cur);
    if (next == cur) break;
    cur = next;
  }
  cur.cached_hereditary = true;
  cur.cached_saturated = true;
  return cur;
}

/// All hereditary saturated subsets, ordered by (size, bit pattern), with
/// meet = intersection and join = closure of the union.
struct Lattice {
  int universe = 0;
  std::vector<VertexSet> members;

  bool contains(const VertexSet& s) const {
    for (const auto& m : members)
      if (m == s) return true;
    return false;
  }
  std::size_t size() const { return members.size(); }
  bool trivial() const { return members.size() <= 2; }  // {} and E0 only
};

inline Lattice enumerate_lattice(const Graph& g, int cap = kDefaultLatticeCap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw ResourceError("lattice enumeration cap exceeded: " + std::to_string(n) + " vertices > cap " +
                        std::to_string(cap));
  Lattice lat;
  lat.universe = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s = VertexSet::from_mask(n, mask);
    if (in_lattice(g, s)) lat.members.push_back(std::move(s));
  }
  std::sort(lat.members.begin(), lat.members.end());
  return lat;
}

inline VertexSet lattice_meet(const VertexSet& a, const VertexSet& b) {
  return a.set_intersection(b);
}
inline VertexSet lattice_join(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return closure(g, a.set_union(b));
}

/// E/H: vertices outside H, edges whose range avoids H. Requires H
/// hereditary (then no surviving edge can start inside H).
inline Graph quotient_graph(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw PreconditionError("quotient requires a hereditary set");
  std::vector<std::string> vs;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!h.contains(v)) vs.push_back(g.vertex_id(v));
  std::vector<std::array<std::string, 3>> es;
  for (const Edge& e : g.edges())
    if (!h.contains(e.range))
      es.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
  return Graph::build(std::move(vs), es);
}

/// E_H: vertices of H, edges whose source lies in H. A non-hereditary H
/// leaves an edge dangling, which surfaces as a structural error.
inline Graph restriction_graph(const Graph& g, const VertexSet& h) {
  if (h.universe() != g.vertex_count()) throw PreconditionError("vertex set universe mismatch");
  std::vector<std::string> vs;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (h.contains(v)) vs.push_back(g.vertex_id(v));
  std::vector<std::array<std::string, 3>> es;
  for (const Edge& e : g.edges())
    if (h.contains(e.source))
      es.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
  return Graph::build(std::move(vs), es);
}

struct CofinalityWitness {
  int vertex = -1;                 // a vertex that misses the path below
  std::optional<int> avoided_sink;  // a sink outside T(vertex), or
  std::optional<Path> avoided_cycle;  // a cycle outside T(vertex)
};

struct CofinalityResult {
  bool cofinal = true;
  std::optional<CofinalityWitness> witness;
  bool lattice_checked = false;  // algorithm B ran (within the cap)
};

/// Cofinality by two independent routes that must agree:
///   A. direct: no vertex v leaves an E-sink or a cycle outside T(v)
///      (exactly the nonexistence of an infinite-or-sink-terminated path
///      avoiding T(v));
///   B. the lattice of hereditary saturated sets is {<empty>, E0}.
inline CofinalityResult is_cofinal(const Graph& g, int lattice_cap = kDefaultLatticeCap) {
  CofinalityResult res;
  for (int v = 0; v < g.vertex_count() && res.cofinal; ++v) {
    VertexSet outside = tree(g, v).complement();
    for (int w : outside.members()) {
      if (g.is_sink(w)) {
        res.cofinal = false;
        res.witness = CofinalityWitness{v, w, std::nullopt};
        break;
      }
    }
    if (!res.cofinal) break;
    if (auto cyc = find_cycle_within(g, outside)) {
      res.cofinal = false;
      res.witness = CofinalityWitness{v, std::nullopt, std::move(cyc)};
    }
  }
  if (g.vertex_count() <= lattice_cap) {
    Lattice lat = enumerate_lattice(g, lattice_cap);
    bool by_lattice = lat.size() == (g.empty() ? 1u : 2u);
    if (by_lattice != res.cofinal)
      throw InternalError("cofinality algorithms disagree");
    res.lattice_checked = true;
  }
  return res;
}

struct ProjsatherCheck {
  bool in_parent = false;       // X hereditary saturated in E
  bool in_restriction = false;  // X hereditary saturated in E_H
  bool agree() const { return in_parent == in_restriction; }
};

/// For H hereditary saturated and X inside H, membership of X in the
/// lattice is the same computed in E or in E_H. Exposed as a hook
/// returning both sides.
inline ProjsatherCheck projsather_check(const Graph& g, const VertexSet& h, const VertexSet& x) {
  if (!in_lattice(g, h)) throw PreconditionError("H must be hereditary saturated");
  if (!x.subset_of(h)) throw PreconditionError("X must be a subset of H");
  ProjsatherCheck out;
  out.in_parent = in_lattice(g, x);
  Graph eh = restriction_graph(g, h);
  VertexSet xh(eh.vertex_count());
  for (int v : x.members()) xh.add(eh.vertex_index(g.vertex_id(v)));
  out.in_restriction = in_lattice(eh, xh);
  return out;
}

}  // namespace lpa
