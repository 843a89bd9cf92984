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
#include "lpa/generators.hpp"
#include "lpa/graph.hpp"
#include "lpa/hersat.hpp"
#include "lpa/monoid.hpp"
#include "lpa/trace.hpp"

namespace lpa {

/// L(v) = { w : w >= v } at the current truncation. On a generated graph
/// the set is recomputed one step deeper; `grows` records whether the
/// frontier still feeds it, which is the truncation's evidence for a left
/// infinite vertex.
struct LeftReach {
  VertexSet set;
  bool finite = true;
  bool grows = false;
};

inline LeftReach left_reach(const Graph& g, int v) {
  LeftReach out{co_tree(g, [&] {
                  VertexSet s(g.vertex_count());
                  s.add(v);
                  return s;
                }()),
                true, false};
  if (g.generator()) {
    Graph deeper = expand_deeper(g, 1);
    VertexSet seed(deeper.vertex_count());
    seed.add(deeper.vertex_index(g.vertex_id(v)));
    VertexSet wider = co_tree(deeper, seed);
    out.grows = wider.count() > out.set.count();
    out.finite = !out.grows;
  }
  return out;
}

inline LeftReach left_reach(const Graph& g, const std::string& v) {
  return left_reach(g, g.vertex_index(v));
}

/// Hypotheses shared by the trace-based comparability results: every
/// vertex on a closed simple path is left infinite, and the graph has no
/// nonzero bounded trace. On a plain finite graph the first hypothesis
/// can only hold vacuously (no closed simple paths at all).
struct StabilityHypotheses {
  bool csp_vertices_left_infinite = true;
  std::optional<int> finite_csp_vertex;  // a CSP vertex with finite L(v)
  bool no_nonzero_trace = true;
  std::optional<TraceVector> trace;  // the offending trace when one exists
  bool hold() const { return csp_vertices_left_infinite && no_nonzero_trace; }
};

inline StabilityHypotheses stability_hypotheses(const Graph& g) {
  StabilityHypotheses hy;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (csp_class(g, v).kind == CspClass::Kind::Zero) continue;
    LeftReach lr = left_reach(g, v);
    if (lr.finite) {
      hy.csp_vertices_left_infinite = false;
      hy.finite_csp_vertex = v;
      break;
    }
  }
  if (auto t = trace_solve(g)) {
    hy.no_nonzero_trace = false;
    hy.trace = std::move(t);
  }
  return hy;
}

struct TomfordeAnswer {
  enum class Status { Yes, Unknown, HypothesisFailure };
  Status status = Status::Unknown;
  StabilityHypotheses hypotheses;
  std::optional<VertexSet> witness_w;
  SearchAnswer comparison;  // the certified sum_V <= sum_W when Yes
};

/// Searches a finite W disjoint from V with sum_V [v] <~ sum_W [w],
/// subsets ordered by (size, declared order).
inline TomfordeAnswer tomforde_check(const Graph& g, const VertexSet& v_set, std::uint64_t bound) {
  TomfordeAnswer out;
  out.hypotheses = stability_hypotheses(g);
  if (!out.hypotheses.hold()) {
    out.status = TomfordeAnswer::Status::HypothesisFailure;
    return out;
  }
  const int n = g.vertex_count();
  if (n > 24) throw ResourceError("witness-set search needs at most 24 vertices");
  MonoidElement target = MonoidElement::sum_of(g, v_set);
  std::vector<int> pool;
  for (int v = 0; v < n; ++v)
    if (!v_set.contains(v)) pool.push_back(v);
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << pool.size()); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    return ca != cb ? ca < cb : a < b;
  });
  for (std::uint64_t m : masks) {
    VertexSet w(n);
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (m >> i & 1) w.add(pool[i]);
    SearchAnswer ans = monoid_leq(g, target, MonoidElement::sum_of(g, w), bound);
    if (ans.yes()) {
      out.status = TomfordeAnswer::Status::Yes;
      out.witness_w = std::move(w);
      out.comparison = std::move(ans);
      return out;
    }
  }
  out.status = TomfordeAnswer::Status::Unknown;
  return out;
}

/// Per-n outcome of the ascending-unit comparability test: some m > n
/// with 2[p_n] + c = [p_m], where p_k sums the first k vertices.
struct QuasistableEntry {
  int n = 0;
  SearchAnswer::Verdict verdict = SearchAnswer::Verdict::Unknown;
  std::optional<int> m;
  SearchAnswer answer;
};

inline std::vector<QuasistableEntry> quasistable_check(const Graph& g, std::uint64_t bound) {
  std::vector<QuasistableEntry> out;
  const int n_max = g.vertex_count();
  const bool truncated = g.generator().has_value();
  for (int n = 1; n <= n_max; ++n) {
    QuasistableEntry entry;
    entry.n = n;
    MonoidElement pn = MonoidElement::zero(g);
    for (int i = 0; i < n; ++i) pn.mult[i] = 1;
    MonoidElement two_pn = pn.plus(pn);
    bool saw_unknown = false;
    for (int m = n + 1; m <= n_max; ++m) {
      MonoidElement pm = MonoidElement::zero(g);
      for (int i = 0; i < m; ++i) pm.mult[i] = 1;
      SearchAnswer ans = monoid_leq(g, two_pn, pm, bound);
      if (ans.yes()) {
        entry.verdict = SearchAnswer::Verdict::Yes;
        entry.m = m;
        entry.answer = std::move(ans);
        break;
      }
      if (ans.verdict == SearchAnswer::Verdict::Unknown) saw_unknown = true;
    }
    if (entry.verdict != SearchAnswer::Verdict::Yes) {
      // Beyond the truncation there are further m to try, so a truncated
      // graph can never conclude No.
      entry.verdict = (saw_unknown || truncated) ? SearchAnswer::Verdict::Unknown
                                                 : SearchAnswer::Verdict::No;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

struct QuotientLiftAnswer {
  enum class Status { Yes, Unknown };
  Status status = Status::Unknown;
  std::optional<VertexSet> x;  // the finite X inside H
  SearchAnswer quotient_comparison;
  SearchAnswer lifted_comparison;
};

/// Quotient-to-ambient lift: given [e] <~ sum_W [w] in the monoid of E/H,
/// find a finite X inside H making [e] <~ sum_W [w] + sum_X [x] in E.
inline QuotientLiftAnswer quotient_lift_check(const Graph& g, const VertexSet& h,
                                              const MonoidElement& e, const VertexSet& w_set,
                                              std::uint64_t bound) {
  if (!is_hereditary(g, h)) throw PreconditionError("H must be hereditary");
  for (int v : h.members())
    if (e.mult[v] || w_set.contains(v))
      throw PreconditionError("e and W must be supported outside H");

  Graph q = quotient_graph(g, h);
  MonoidElement eq = MonoidElement::zero(q);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (e.mult[v]) eq.mult[q.vertex_index(g.vertex_id(v))] = e.mult[v];
  VertexSet wq(q.vertex_count());
  for (int v : w_set.members()) wq.add(q.vertex_index(g.vertex_id(v)));

  QuotientLiftAnswer out;
  out.quotient_comparison = monoid_leq(q, eq, MonoidElement::sum_of(q, wq), bound);
  if (!out.quotient_comparison.yes())
    throw PreconditionError(std::string("the comparison does not hold in the quotient monoid (") +
                            to_string(out.quotient_comparison.verdict) + ")");

  MonoidElement base = MonoidElement::sum_of(g, w_set);
  std::vector<int> pool = h.members();
  if (pool.size() > 24) throw ResourceError("lift search needs at most 24 vertices in H");
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pool.size()); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    return ca != cb ? ca < cb : a < b;
  });
  for (std::uint64_t m : masks) {
    VertexSet x(g.vertex_count());
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (m >> i & 1) x.add(pool[i]);
    SearchAnswer ans = monoid_leq(g, e, base.plus(MonoidElement::sum_of(g, x)), bound);
    if (ans.yes()) {
      out.status = QuotientLiftAnswer::Status::Yes;
      out.x = std::move(x);
      out.lifted_comparison = std::move(ans);
      return out;
    }
  }
  out.status = QuotientLiftAnswer::Status::Unknown;
  return out;
}

}  // namespace lpa
