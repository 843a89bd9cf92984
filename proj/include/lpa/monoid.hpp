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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// An element of the graph monoid: a finitely supported multiset of
/// vertices, stored densely over the declared order.
struct MonoidElement {
  std::vector<std::uint32_t> mult;

  static MonoidElement zero(const Graph& g) {
    return MonoidElement{std::vector<std::uint32_t>(g.vertex_count(), 0)};
  }
  static MonoidElement unit(const Graph& g, int v) {
    MonoidElement e = zero(g);
    e.mult.at(v) += 1;
    return e;
  }
  static MonoidElement of(const Graph& g, const std::map<std::string, std::uint32_t>& entries) {
    MonoidElement e = zero(g);
    for (const auto& [id, k] : entries) e.mult.at(g.vertex_index(id)) += k;
    return e;
  }
  static MonoidElement sum_of(const Graph& g, const VertexSet& s) {
    MonoidElement e = zero(g);
    for (int v : s.members()) e.mult[v] += 1;
    return e;
  }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto m : mult) t += m;
    return t;
  }
  bool dominates(const MonoidElement& o) const {
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (mult[i] < o.mult[i]) return false;
    return true;
  }
  MonoidElement plus(const MonoidElement& o) const {
    MonoidElement r = *this;
    for (std::size_t i = 0; i < mult.size(); ++i) r.mult[i] += o.mult[i];
    return r;
  }
  MonoidElement minus(const MonoidElement& o) const {
    MonoidElement r = *this;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (r.mult[i] < o.mult[i]) throw PreconditionError("monoid subtraction would go negative");
      r.mult[i] -= o.mult[i];
    }
    return r;
  }
  std::map<std::string, std::uint32_t> entries(const Graph& g) const {
    std::map<std::string, std::uint32_t> out;
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (mult[i]) out[g.vertex_id(static_cast<int>(i))] = mult[i];
    return out;
  }
  friend bool operator==(const MonoidElement& a, const MonoidElement& b) { return a.mult == b.mult; }
};

/// The defining relation at a non-sink vertex: v <-> sum of the ranges of
/// its out-edges, usable in both directions.
struct MonoidRelation {
  int vertex = -1;
  MonoidElement ranges;  // multiset of r(e) over s(e) = v
};

inline std::vector<MonoidRelation> monoid_relations(const Graph& g) {
  std::vector<MonoidRelation> rels;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) continue;
    MonoidRelation r;
    r.vertex = v;
    r.ranges = MonoidElement::zero(g);
    for (int k : g.out_edges(v)) r.ranges.mult[g.edge(k).range] += 1;
    rels.push_back(std::move(r));
  }
  return rels;
}

/// One rewrite: expand replaces a copy of the vertex by its out-edge
/// ranges; contract is the inverse.
struct RewriteStep {
  int vertex = -1;
  bool expand = true;
};

/// Applies one step, or fails loudly when it does not apply.
inline MonoidElement apply_step(const std::vector<MonoidRelation>& rels, const MonoidElement& e,
                                const RewriteStep& step) {
  for (const MonoidRelation& r : rels) {
    if (r.vertex != step.vertex) continue;
    if (step.expand) {
      if (e.mult.at(r.vertex) == 0) throw PreconditionError("expand step on absent vertex");
      MonoidElement out = e;
      out.mult[r.vertex] -= 1;
      for (std::size_t i = 0; i < out.mult.size(); ++i) out.mult[i] += r.ranges.mult[i];
      return out;
    }
    if (!e.dominates(r.ranges)) throw PreconditionError("contract step lacks the range multiset");
    MonoidElement out = e.minus(r.ranges);
    out.mult[r.vertex] += 1;
    return out;
  }
  throw PreconditionError("no relation at vertex index " + std::to_string(step.vertex));
}

/// Replays a certificate from `start`, returning the element it ends at.
inline MonoidElement replay(const Graph& g, const MonoidElement& start,
                            const std::vector<RewriteStep>& steps) {
  auto rels = monoid_relations(g);
  MonoidElement cur = start;
  for (const RewriteStep& s : steps) cur = apply_step(rels, cur, s);
  return cur;
}

/// Outcome of a comparability search. A Yes carries a replayable
/// derivation start -> end; No is only reported when the whole congruence
/// class fit under the cap, so the verdict does not depend on the bound.
struct SearchAnswer {
  enum class Verdict { Yes, No, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::uint64_t bound = 0;
  MonoidElement start;
  MonoidElement end;
  std::vector<RewriteStep> steps;
  std::optional<MonoidElement> complement;  // the c with a + c = start, for order queries

  bool yes() const { return verdict == Verdict::Yes; }
};

inline const char* to_string(SearchAnswer::Verdict v) {
  switch (v) {
    case SearchAnswer::Verdict::Yes: return "yes";
    case SearchAnswer::Verdict::No: return "no";
    default: return "unknown";
  }
}

namespace detail {

struct ClassExploration {
  std::vector<MonoidElement> states;  // discovery order; states[0] = origin
  std::map<std::vector<std::uint32_t>, int> index;
  std::vector<int> parent;
  std::vector<RewriteStep> via;
  bool complete = true;  // no neighbor was suppressed by a cap
};

/// Breadth-first closure of a congruence class under the rewrite rules,
/// capped by total multiplicity and by state count. `found` may stop the
/// walk early.
template <typename Found>
inline ClassExploration explore_class(const std::vector<MonoidRelation>& rels,
                                      const MonoidElement& origin, std::uint64_t bound,
                                      std::size_t max_states, Found&& found) {
  ClassExploration ex;
  ex.states.push_back(origin);
  ex.index.emplace(origin.mult, 0);
  ex.parent.push_back(-1);
  ex.via.push_back(RewriteStep{});
  if (found(origin, 0)) return ex;  // the empty derivation needs no budget
  if (origin.total() > bound) {
    ex.complete = false;
    return ex;
  }
  for (std::size_t qi = 0; qi < ex.states.size(); ++qi) {
    MonoidElement cur = ex.states[qi];
    for (const MonoidRelation& r : rels) {
      for (int dir = 0; dir < 2; ++dir) {
        const bool expand = dir == 0;
        if (expand && cur.mult[r.vertex] == 0) continue;
        if (!expand && !cur.dominates(r.ranges)) continue;
        RewriteStep step{r.vertex, expand};
        MonoidElement next = apply_step(rels, cur, step);
        if (next.total() > bound) {
          ex.complete = false;
          continue;
        }
        if (ex.index.count(next.mult)) continue;
        if (ex.states.size() >= max_states) {
          ex.complete = false;
          return ex;
        }
        int id = static_cast<int>(ex.states.size());
        ex.index.emplace(next.mult, id);
        ex.states.push_back(next);
        ex.parent.push_back(static_cast<int>(qi));
        ex.via.push_back(step);
        if (found(ex.states.back(), id)) return ex;
      }
    }
  }
  return ex;
}

inline std::vector<RewriteStep> path_from_origin(const ClassExploration& ex, int id) {
  std::vector<RewriteStep> steps;
  for (int cur = id; ex.parent[cur] != -1; cur = ex.parent[cur]) steps.push_back(ex.via[cur]);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

inline std::vector<RewriteStep> inverted(std::vector<RewriteStep> steps) {
  std::reverse(steps.begin(), steps.end());
  for (RewriteStep& s : steps) s.expand = !s.expand;
  return steps;
}

inline constexpr std::size_t kDefaultStateCap = 400'000;

}  // namespace detail

/// Decides a = b in the graph monoid by breadth-first search over the
/// congruence class, with a total-multiplicity cap.
inline SearchAnswer monoid_equal(const Graph& g, const MonoidElement& a, const MonoidElement& b,
                                 std::uint64_t bound,
                                 std::size_t max_states = detail::kDefaultStateCap) {
  auto rels = monoid_relations(g);
  SearchAnswer ans;
  ans.bound = bound;
  ans.start = a;
  ans.end = b;
  int hit = -1;
  auto ex_a = detail::explore_class(rels, a, bound, max_states, [&](const MonoidElement& e, int id) {
    if (e == b) {
      hit = id;
      return true;
    }
    return false;
  });
  if (hit >= 0) {
    ans.verdict = SearchAnswer::Verdict::Yes;
    ans.steps = detail::path_from_origin(ex_a, hit);
    return ans;
  }
  if (ex_a.complete) {
    ans.verdict = SearchAnswer::Verdict::No;
    return ans;
  }
  int hit_b = -1;
  auto ex_b = detail::explore_class(rels, b, bound, max_states, [&](const MonoidElement& e, int id) {
    if (e == a) {
      hit_b = id;
      return true;
    }
    return false;
  });
  if (hit_b >= 0) {
    ans.verdict = SearchAnswer::Verdict::Yes;
    ans.steps = detail::inverted(detail::path_from_origin(ex_b, hit_b));
    return ans;
  }
  ans.verdict = ex_b.complete ? SearchAnswer::Verdict::No : SearchAnswer::Verdict::Unknown;
  return ans;
}

/// Decides a <~ b (some c with a + c = b in the monoid) by walking b's
/// congruence class looking for a representative dominating a. The Yes
/// certificate is (c, derivation of a + c into b).
inline SearchAnswer monoid_leq(const Graph& g, const MonoidElement& a, const MonoidElement& b,
                               std::uint64_t bound,
                               std::size_t max_states = detail::kDefaultStateCap) {
  auto rels = monoid_relations(g);
  SearchAnswer ans;
  ans.bound = bound;
  ans.end = b;
  int hit = -1;
  auto ex = detail::explore_class(rels, b, bound, max_states, [&](const MonoidElement& e, int id) {
    if (e.dominates(a)) {
      hit = id;
      return true;
    }
    return false;
  });
  if (hit >= 0) {
    ans.verdict = SearchAnswer::Verdict::Yes;
    ans.complement = ex.states[hit].minus(a);
    ans.start = ex.states[hit];  // equals a + c
    ans.steps = detail::inverted(detail::path_from_origin(ex, hit));
    return ans;
  }
  ans.start = a;
  ans.verdict = ex.complete ? SearchAnswer::Verdict::No : SearchAnswer::Verdict::Unknown;
  return ans;
}

/// True when the recorded derivation really transforms start into end.
inline bool certificate_replays(const Graph& g, const SearchAnswer& ans) {
  if (ans.verdict != SearchAnswer::Verdict::Yes) return false;
  try {
    return replay(g, ans.start, ans.steps) == ans.end;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace lpa
