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
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

/// An edge of a directed multigraph. Parallel edges and loops are
/// distinguished by id.
struct Edge {
  std::string id;
  int source = -1;
  int range = -1;
};

/// Marks a graph as the depth-d truncation of a generated infinite family.
struct GeneratorInfo {
  std::string family;
  int depth = 0;
};

/// A finite directed multigraph E = (E0, E1, r, s) with ordered, opaque
/// string ids. Immutable after construction; all operations in this
/// library are pure functions of a Graph value, so graphs can be shared
/// freely across threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from declared vertex ids and (id, source, range)
  /// edge triples, reporting every structural violation at once.
  static Graph build(std::vector<std::string> vertex_ids,
                     const std::vector<std::array<std::string, 3>>& edge_triples,
                     std::optional<GeneratorInfo> generator = std::nullopt) {
    Graph g;
    std::vector<std::string> issues;
    for (int i = 0; i < static_cast<int>(vertex_ids.size()); ++i) {
      auto [it, fresh] = g.vertex_index_.emplace(vertex_ids[i], i);
      if (!fresh) issues.push_back("duplicate vertex id '" + vertex_ids[i] + "'");
    }
    g.vertex_ids_ = std::move(vertex_ids);
    g.out_.resize(g.vertex_ids_.size());
    g.in_.resize(g.vertex_ids_.size());
    for (const auto& [id, src, dst] : edge_triples) {
      Edge e;
      e.id = id;
      auto [it, fresh] = g.edge_index_.emplace(id, static_cast<int>(g.edges_.size()));
      if (!fresh) issues.push_back("duplicate edge id '" + id + "'");
      if (auto s = g.vertex_index_.find(src); s != g.vertex_index_.end()) {
        e.source = s->second;
      } else {
        issues.push_back("edge '" + id + "' has undeclared source '" + src + "'");
      }
      if (auto r = g.vertex_index_.find(dst); r != g.vertex_index_.end()) {
        e.range = r->second;
      } else {
        issues.push_back("edge '" + id + "' has undeclared range '" + dst + "'");
      }
      g.edges_.push_back(std::move(e));
    }
    if (!issues.empty()) {
      std::string msg = "invalid graph:";
      for (const auto& s : issues) msg += "\n  - " + s;
      throw StructuralError(msg);
    }
    for (int k = 0; k < static_cast<int>(g.edges_.size()); ++k) {
      g.out_[g.edges_[k].source].push_back(k);
      g.in_[g.edges_[k].range].push_back(k);
    }
    g.generator_ = std::move(generator);
    return g;
  }

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return vertex_ids_.empty(); }

  const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const Edge& edge(int k) const { return edges_.at(k); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
  bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }

  int vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw PreconditionError("unknown vertex '" + id + "'");
    return it->second;
  }
  int edge_index(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw PreconditionError("unknown edge '" + id + "'");
    return it->second;
  }

  /// Out-edges s^{-1}(v), as edge indices in declared order.
  std::span<const int> out_edges(int v) const { return out_.at(v); }
  /// In-edges r^{-1}(v), as edge indices in declared order.
  std::span<const int> in_edges(int v) const { return in_.at(v); }

  int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_.at(v).size()); }
  bool is_sink(int v) const { return out_.at(v).empty(); }
  bool is_source(int v) const { return in_.at(v).empty(); }

  const std::optional<GeneratorInfo>& generator() const { return generator_; }

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> edge_index_;
  std::optional<GeneratorInfo> generator_;
};

/// A subset of E0, stored as a bitset over the declared vertex order.
/// Hereditary/saturated verdicts are cached tri-state (yes/no/unknown);
/// mutation clears the cache.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_((universe + 63) / 64, 0), size_(universe) {}

  static VertexSet of(const Graph& g, const std::vector<std::string>& ids) {
    VertexSet s(g.vertex_count());
    for (const auto& id : ids) s.add(g.vertex_index(id));
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.add(v);
    return s;
  }
  static VertexSet from_mask(int universe, std::uint64_t mask) {
    VertexSet s(universe);
    for (int v = 0; v < universe && v < 64; ++v)
      if (mask >> v & 1) s.add(v);
    return s;
  }

  int universe() const { return size_; }
  bool contains(int v) const { return bits_[v / 64] >> (v % 64) & 1; }
  void add(int v) {
    bits_[v / 64] |= std::uint64_t{1} << (v % 64);
    invalidate();
  }
  void remove(int v) {
    bits_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    invalidate();
  }

  int count() const {
    int c = 0;
    for (auto b : bits_) c += __builtin_popcountll(b);
    return c;
  }
  bool none() const {
    for (auto b : bits_)
      if (b) return false;
    return true;
  }
  bool is_full() const { return count() == size_; }

  /// Members in declared order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (int v = 0; v < size_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }
  std::vector<std::string> ids(const Graph& g) const {
    std::vector<std::string> out;
    for (int v : members()) out.push_back(g.vertex_id(v));
    return out;
  }

  std::uint64_t mask() const {
    if (size_ > 64) throw ResourceError("vertex set too large for a 64-bit mask");
    return bits_.empty() ? 0 : bits_[0];
  }

  bool subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.size_ == b.size_ && a.bits_ == b.bits_;
  }
  // Orders by size, then numerically on the bit pattern.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return std::lexicographical_compare(a.bits_.rbegin(), a.bits_.rend(),
                                        b.bits_.rbegin(), b.bits_.rend());
  }

  VertexSet set_union(const VertexSet& o) const {
    VertexSet r(size_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
  }
  VertexSet set_intersection(const VertexSet& o) const {
    VertexSet r(size_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
  }
  VertexSet set_difference(const VertexSet& o) const {
    VertexSet r(size_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
    return r;
  }
  VertexSet complement() const {
    VertexSet r = full(size_);
    return r.set_difference(*this);
  }

  // Tri-state verdict cache, filled by is_hereditary / is_saturated.
  mutable std::optional<bool> cached_hereditary;
  mutable std::optional<bool> cached_saturated;

 private:
  void invalidate() {
    cached_hereditary.reset();
    cached_saturated.reset();
  }
  std::vector<std::uint64_t> bits_;
  int size_ = 0;
};

/// A nonempty edge sequence with r(mu_i) = s(mu_{i+1}).
struct Path {
  std::vector<int> edges;

  int source(const Graph& g) const { return g.edge(edges.front()).source; }
  int range(const Graph& g) const { return g.edge(edges.back()).range; }
  int length() const { return static_cast<int>(edges.size()); }

  bool valid(const Graph& g) const {
    if (edges.empty()) return false;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
      if (g.edge(edges[i]).range != g.edge(edges[i + 1]).source) return false;
    return true;
  }

  /// mu^0: the vertices visited, in declared order without repetition.
  VertexSet vertex_set(const Graph& g) const {
    VertexSet s(g.vertex_count());
    for (int k : edges) {
      s.add(g.edge(k).source);
      s.add(g.edge(k).range);
    }
    return s;
  }

  std::vector<std::string> edge_ids(const Graph& g) const {
    std::vector<std::string> out;
    for (int k : edges) out.push_back(g.edge(k).id);
    return out;
  }

  friend bool operator==(const Path& a, const Path& b) { return a.edges == b.edges; }
};

struct ValidationResult {
  bool ok = true;
  bool empty_graph = false;
  std::vector<std::string> issues;
};

/// Checks the Graph invariants on raw input without throwing.
inline ValidationResult validate(const std::vector<std::string>& vertex_ids,
                                 const std::vector<std::array<std::string, 3>>& edges) {
  ValidationResult r;
  try {
    Graph g = Graph::build(vertex_ids, edges);
    r.empty_graph = g.empty();
  } catch (const StructuralError& e) {
    r.ok = false;
    std::string text = e.what();
    std::size_t pos = 0;
    while ((pos = text.find("\n  - ", pos)) != std::string::npos) {
      pos += 5;
      std::size_t end = text.find('\n', pos);
      r.issues.push_back(text.substr(pos, end == std::string::npos ? end : end - pos));
    }
  }
  return r;
}

inline ValidationResult validate(const Graph& g) {
  ValidationResult r;
  r.empty_graph = g.empty();
  return r;  // a constructed Graph already satisfies the invariants
}

/// T(X): every vertex reachable from X, including X. The smallest
/// hereditary set containing X.
inline VertexSet tree(const Graph& g, const VertexSet& from) {
  VertexSet seen(g.vertex_count());
  std::vector<int> stack = from.members();
  for (int v : stack) seen.add(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int k : g.out_edges(v)) {
      int w = g.edge(k).range;
      if (!seen.contains(w)) {
        seen.add(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

inline VertexSet tree(const Graph& g, int v) {
  VertexSet s(g.vertex_count());
  s.add(v);
  return tree(g, s);
}

/// All vertices that reach `to`, including `to` itself.
inline VertexSet co_tree(const Graph& g, const VertexSet& to) {
  VertexSet seen(g.vertex_count());
  std::vector<int> stack = to.members();
  for (int v : stack) seen.add(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int k : g.in_edges(v)) {
      int w = g.edge(k).source;
      if (!seen.contains(w)) {
        seen.add(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

/// v >= w: a (possibly empty) path from v to w exists.
inline bool reaches(const Graph& g, int v, int w) {
  if (v < 0 || v >= g.vertex_count() || w < 0 || w >= g.vertex_count())
    throw PreconditionError("vertex index out of range");
  return tree(g, v).contains(w);
}
inline bool reaches(const Graph& g, const std::string& v, const std::string& w) {
  return reaches(g, g.vertex_index(v), g.vertex_index(w));
}

inline VertexSet sinks(const Graph& g) {
  VertexSet s(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) s.add(v);
  return s;
}

inline VertexSet sources(const Graph& g) {
  VertexSet s(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_source(v)) s.add(v);
  return s;
}

/// Strongly connected components with a topological condensation order
/// (component 0 has no incoming edges from other components).
struct SccInfo {
  std::vector<int> component;           // vertex -> component id
  std::vector<std::vector<int>> members;  // component id -> vertices, declared order
  std::vector<bool> has_cycle;          // >= 2 vertices or a loop edge
};

inline SccInfo scc(const Graph& g) {
  const int n = g.vertex_count();
  SccInfo info;
  info.component.assign(n, -1);
  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0;
  std::vector<int> order;  // components in reverse topological order
  struct Frame {
    int v;
    std::size_t edge_pos;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto outs = g.out_edges(f.v);
      if (f.edge_pos < outs.size()) {
        int w = g.edge(outs[f.edge_pos++]).range;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          int comp = static_cast<int>(info.members.size());
          info.members.emplace_back();
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            info.component[w] = comp;
            info.members[comp].push_back(w);
          } while (w != f.v);
          std::sort(info.members[comp].begin(), info.members[comp].end());
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  // Tarjan emits components in reverse topological order; flip it.
  const int c = static_cast<int>(info.members.size());
  std::reverse(info.members.begin(), info.members.end());
  for (int v = 0; v < n; ++v) info.component[v] = c - 1 - info.component[v];
  info.has_cycle.assign(c, false);
  for (int i = 0; i < c; ++i)
    if (info.members[i].size() >= 2) info.has_cycle[i] = true;
  for (int k = 0; k < g.edge_count(); ++k)
    if (g.edge(k).source == g.edge(k).range)
      info.has_cycle[info.component[g.edge(k).source]] = true;
  return info;
}

inline bool is_acyclic(const Graph& g) {
  SccInfo info = scc(g);
  return std::none_of(info.has_cycle.begin(), info.has_cycle.end(), [](bool b) { return b; });
}

/// Extracts the subgraph on the given vertex/edge id sets, preserving the
/// parent's declared order. Edge endpoints must lie inside the vertex set.
inline Graph make_subgraph(const Graph& g, const VertexSet& vset,
                           const std::vector<bool>& edge_in) {
  std::vector<std::string> vs;
  for (int v : vset.members()) vs.push_back(g.vertex_id(v));
  std::vector<std::array<std::string, 3>> es;
  for (int k = 0; k < g.edge_count(); ++k) {
    if (!edge_in[k]) continue;
    const Edge& e = g.edge(k);
    if (!vset.contains(e.source) || !vset.contains(e.range))
      throw PreconditionError("subgraph edge '" + e.id + "' has an endpoint outside the vertex set");
    es.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
  }
  return Graph::build(std::move(vs), es);
}

/// Induced subgraph: all edges with both endpoints in the set.
inline Graph induced_subgraph(const Graph& g, const VertexSet& vset) {
  std::vector<bool> edge_in(g.edge_count(), false);
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    edge_in[k] = vset.contains(e.source) && vset.contains(e.range);
  }
  return make_subgraph(g, vset, edge_in);
}

/// True when `sub`'s vertices and edges all occur in `g` with the same
/// endpoints (matching by id).
inline bool is_subgraph_of(const Graph& sub, const Graph& g) {
  for (const auto& id : sub.vertex_ids())
    if (!g.has_vertex(id)) return false;
  for (const Edge& e : sub.edges()) {
    if (!g.has_edge(e.id)) return false;
    const Edge& pe = g.edge(g.edge_index(e.id));
    if (g.vertex_id(pe.source) != sub.vertex_id(e.source)) return false;
    if (g.vertex_id(pe.range) != sub.vertex_id(e.range)) return false;
  }
  return true;
}

/// The inclusion sub -> g is a complete graph homomorphism: injective on
/// vertices and, at every vertex of `sub` that emits edges in `sub`,
/// carrying the full out-edge set of `g`.
inline bool is_complete_inclusion(const Graph& sub, const Graph& g) {
  if (!is_subgraph_of(sub, g)) return false;
  for (int v = 0; v < sub.vertex_count(); ++v) {
    if (sub.is_sink(v)) continue;
    int gv = g.vertex_index(sub.vertex_id(v));
    if (sub.out_degree(v) != g.out_degree(gv)) return false;
  }
  return true;
}

}  // namespace lpa
