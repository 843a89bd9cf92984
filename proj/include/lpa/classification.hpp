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
#include <set>
#include <string>
#include <vector>

#include "lpa/constructions.hpp"
#include "lpa/cycles.hpp"
#include "lpa/generators.hpp"
#include "lpa/graph.hpp"
#include "lpa/hersat.hpp"

namespace lpa {

/// L(E) is an exchange ring exactly when the graph satisfies
/// condition (K).
inline bool is_exchange(const Graph& g) { return condition_K(g).holds; }

/// The graph-testable faces of the exchange characterization, which must
/// agree on every graph:
///   cond2: E/H satisfies (L) for every hereditary saturated H;
///   cond3: E satisfies (K);
///   cond5: E_H and E/H satisfy (K) for every such H;
///   cond6: ... for at least one such H.
struct ExchangeAudit {
  bool cond2 = true, cond3 = true, cond5 = true, cond6 = false;
  std::optional<VertexSet> cond2_failure;  // an H whose quotient misses (L)
  std::optional<VertexSet> cond5_failure;
  bool consistent() const { return cond2 == cond3 && cond3 == cond5 && cond5 == cond6; }
};

inline ExchangeAudit exchange_equivalence_audit(const Graph& g, int cap = kDefaultLatticeCap) {
  ExchangeAudit audit;
  audit.cond3 = condition_K(g).holds;
  Lattice lat = enumerate_lattice(g, cap);
  for (const VertexSet& h : lat.members) {
    Graph quot = quotient_graph(g, h);
    if (audit.cond2 && !condition_L(quot).holds) {
      audit.cond2 = false;
      audit.cond2_failure = h;
    }
    bool both_k = condition_K(restriction_graph(g, h)).holds && condition_K(quot).holds;
    if (!both_k && audit.cond5) {
      audit.cond5 = false;
      audit.cond5_failure = h;
    }
    if (both_k) audit.cond6 = true;
  }
  if (!audit.consistent()) throw InternalError("exchange equivalence audit disagrees");
  return audit;
}

/// A candidate maximal tail with its three defining marks:
///   MT1 backward closed, MT2 never forced to leave, MT3 downward
///   directed. MT1 and MT2 together say the complement is hereditary
///   saturated.
struct TailSet {
  VertexSet members;
  bool mt1 = false, mt2 = false, mt3 = false;
  bool maximal_tail() const { return mt1 && mt2 && mt3 && !members.none(); }
};

inline TailSet tail_flags(const Graph& g, const VertexSet& m) {
  TailSet t;
  t.members = m;
  t.mt1 = co_tree(g, m) == m;
  t.mt2 = true;
  for (int v : m.members()) {
    if (g.is_sink(v)) continue;
    bool stays = false;
    for (int k : g.out_edges(v))
      if (m.contains(g.edge(k).range)) {
        stays = true;
        break;
      }
    if (!stays) {
      t.mt2 = false;
      break;
    }
  }
  t.mt3 = true;
  std::vector<int> vs = m.members();
  std::vector<VertexSet> trees;
  trees.reserve(vs.size());
  for (int v : vs) trees.push_back(tree(g, v));
  for (std::size_t i = 0; i < vs.size() && t.mt3; ++i)
    for (std::size_t j = i; j < vs.size(); ++j) {
      if (trees[i].set_intersection(trees[j]).set_intersection(m).none()) {
        t.mt3 = false;
        break;
      }
    }
  return t;
}

/// All maximal tails: complements of proper lattice members that are in
/// addition downward directed.
inline std::vector<TailSet> maximal_tails(const Graph& g, int cap = kDefaultLatticeCap) {
  std::vector<TailSet> out;
  for (const VertexSet& h : enumerate_lattice(g, cap).members) {
    if (h.is_full()) continue;  // empty complement
    TailSet t = tail_flags(g, h.complement());
    if (t.maximal_tail()) out.push_back(std::move(t));
  }
  return out;
}

/// Per-H primeness of the corresponding ideal: I(H) is prime exactly when
/// the complement is a maximal tail. Under condition (K) this is the
/// whole prime spectrum.
struct PrimeEntry {
  VertexSet h;
  bool is_prime = false;
};

inline std::vector<PrimeEntry> prime_ideal_report(const Graph& g, int cap = kDefaultLatticeCap) {
  std::vector<PrimeEntry> out;
  for (const VertexSet& h : enumerate_lattice(g, cap).members) {
    PrimeEntry e{h, false};
    if (!h.is_full()) e.is_prime = tail_flags(g, h.complement()).maximal_tail();
    out.push_back(std::move(e));
  }
  return out;
}

/// X0: vertices with two distinct out-edges both returning to their
/// source; the seed of the rank-two ideal.
struct X0Result {
  VertexSet x0;
  VertexSet x0_closure;
};

inline X0Result x0_set(const Graph& g) {
  X0Result r{VertexSet(g.vertex_count()), VertexSet(g.vertex_count())};
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet seed(g.vertex_count());
    seed.add(v);
    VertexSet reaching = co_tree(g, seed);
    int returning = 0;
    for (int k : g.out_edges(v))
      if (reaching.contains(g.edge(k).range)) ++returning;
    if (returning >= 2) r.x0.add(v);
  }
  r.x0_closure = closure(g, r.x0);
  return r;
}

/// Search result for a purely-infinite-simple quotient: an H whose
/// quotient graph is nonempty, finite, cofinal and sink free.
struct PisSearch {
  std::optional<VertexSet> witness;
  bool at_bound = false;  // generated graph: verdict holds at this depth only
};

namespace detail {

inline bool pis_quotient_ok(const Graph& q, int cap) {
  if (q.empty()) return false;
  if (!sinks(q).none()) return false;
  return is_cofinal(q, cap).cofinal;
}

// Same vertex/edge id sets: the quotient did not move when the
// truncation got deeper.
inline bool same_ids(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (const auto& id : a.vertex_ids())
    if (!b.has_vertex(id)) return false;
  for (const Edge& e : a.edges())
    if (!b.has_edge(e.id)) return false;
  return true;
}

}  // namespace detail

inline PisSearch pis_quotient_witness(const Graph& g, int cap = kDefaultLatticeCap) {
  if (!condition_K(g).holds)
    throw PreconditionError("purely-infinite-simple detection requires condition (K)");
  PisSearch out;
  if (!g.generator()) {
    for (const VertexSet& h : enumerate_lattice(g, cap).members) {
      if (detail::pis_quotient_ok(quotient_graph(g, h), cap)) {
        out.witness = h;
        return out;
      }
    }
    return out;
  }

  // Generated truncation: candidates are closures of vertex subsets, and
  // a candidate only counts if its quotient survives a deeper cut
  // unchanged. The verdict is labeled with the depth either way.
  out.at_bound = true;
  const int n = g.vertex_count();
  if (n > cap) throw ResourceError("candidate search cap exceeded on generated graph");
  Graph deeper = expand_deeper(g, 2);
  std::set<std::vector<std::string>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet h = closure(g, VertexSet::from_mask(n, mask));
    auto key = h.ids(g);
    if (!seen.insert(key).second) continue;
    Graph quot = quotient_graph(g, h);
    if (!detail::pis_quotient_ok(quot, cap)) continue;
    VertexSet seed(deeper.vertex_count());
    for (const auto& id : key) seed.add(deeper.vertex_index(id));
    Graph deep_quot = quotient_graph(deeper, closure(deeper, seed));
    if (!detail::same_ids(quot, deep_quot)) continue;  // an artifact of the cut
    out.witness = h;
    return out;
  }
  return out;
}

/// The stable-rank value of L(E) for graphs satisfying condition (K):
/// 1 on acyclic graphs, infinity when a purely-infinite-simple quotient
/// exists, 2 otherwise. Graphs missing (K) are reported unknown rather
/// than guessed.
struct StableRankVerdict {
  enum class Value { One, Two, Infinity, Unknown };
  Value value = Value::Unknown;
  bool at_bound = false;
  std::optional<int> depth;
  std::optional<VertexSet> witness;  // H for the infinite case
  std::string basis;
};

inline const char* to_string(StableRankVerdict::Value v) {
  switch (v) {
    case StableRankVerdict::Value::One: return "1";
    case StableRankVerdict::Value::Two: return "2";
    case StableRankVerdict::Value::Infinity: return "infinity";
    default: return "unknown";
  }
}

inline StableRankVerdict stable_rank(const Graph& g, int cap = kDefaultLatticeCap) {
  StableRankVerdict v;
  if (g.generator()) v.depth = g.generator()->depth;
  if (!condition_K(g).holds) {
    v.value = StableRankVerdict::Value::Unknown;
    v.basis = "the trichotomy requires condition (K)";
    return v;
  }
  if (is_acyclic(g)) {
    v.value = StableRankVerdict::Value::One;
    v.basis = "acyclic graph";
    v.at_bound = g.generator().has_value();
    return v;
  }
  PisSearch pis = pis_quotient_witness(g, cap);
  if (pis.witness) {
    v.value = StableRankVerdict::Value::Infinity;
    v.witness = pis.witness;
    v.at_bound = pis.at_bound;
    v.basis = "nonempty finite cofinal sink-free quotient";
    return v;
  }
  v.value = StableRankVerdict::Value::Two;
  v.at_bound = pis.at_bound;
  v.basis = pis.at_bound ? "no purely-infinite-simple quotient up to the truncation depth"
                         : "purely-infinite-simple quotient search exhausted the lattice";
  return v;
}

/// One-stop aggregation of the verdicts, for the report writer.
struct ClassificationReport {
  bool empty_graph = false;
  ConditionLResult cond_l;
  ConditionKResult cond_k;
  bool exchange = false;
  std::optional<std::size_t> lattice_size;  // absent when the cap was exceeded
  std::optional<ExchangeAudit> audit;
  std::vector<TailSet> tails;
  std::vector<PrimeEntry> primes;
  std::optional<PisSearch> pis;  // only run under condition (K)
  X0Result x0;
  StableRankVerdict rank;
  std::vector<std::string> annotations;
  std::optional<int> depth;
};

inline ClassificationReport classify(const Graph& g, int cap = kDefaultLatticeCap) {
  ClassificationReport rep;
  rep.empty_graph = g.empty();
  if (g.generator()) rep.depth = g.generator()->depth;
  rep.cond_l = condition_L(g);
  rep.cond_k = condition_K(g);
  rep.exchange = rep.cond_k.holds;
  rep.x0 = x0_set(g);

  const bool acyclic = is_acyclic(g);
  if (acyclic && !g.generator()) rep.annotations.push_back("finite acyclic graph: L(E) is matricial");
  if (acyclic) rep.annotations.push_back("acyclic graph: L(E) is locally matricial");
  if (!rep.cond_k.holds)
    rep.annotations.push_back("condition (K) fails: the ideal lattice may exceed the graded lattice");

  bool rank_set = false;
  try {
    rep.rank = stable_rank(g, cap);
    rank_set = true;
    if (rep.cond_k.holds) rep.pis = pis_quotient_witness(g, cap);
    Lattice lat = enumerate_lattice(g, cap);
    rep.lattice_size = lat.size();
    rep.audit = exchange_equivalence_audit(g, cap);
    rep.tails = maximal_tails(g, cap);
    rep.primes = prime_ideal_report(g, cap);
    for (const VertexSet& h : lat.members) {
      if (h.none() || h.is_full()) continue;
      std::string ids;
      for (const auto& id : h.ids(g)) ids += (ids.empty() ? "" : ",") + id;
      rep.annotations.push_back("I({" + ids + "}) is Morita equivalent to L(E_H)");
    }
  } catch (const ResourceError&) {
    if (!rank_set) {
      rep.rank = StableRankVerdict{};
      rep.rank.basis = "lattice cap exceeded";
    }
    rep.annotations.push_back("lattice cap exceeded: lattice-based reports skipped");
  }
  return rep;
}

}  // namespace lpa
