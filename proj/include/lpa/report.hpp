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

#include <string>
#include <vector>

#include "lpa/classification.hpp"
#include "lpa/constructions.hpp"
#include "lpa/document.hpp"
#include "lpa/hersat.hpp"
#include "lpa/monoid.hpp"
#include "lpa/stability.hpp"
#include "lpa/trace.hpp"

namespace lpa {

// Report fragments. Every verdict names the operation and parameters
// that produced it, and every Yes embeds a replayable witness.

inline Json json_ids(const Graph& g, const VertexSet& s) {
  Json a = Json::array();
  for (const auto& id : s.ids(g)) a.push_back(id);
  return a;
}

inline Json json_path(const Graph& g, const Path& p) {
  Json a = Json::array();
  for (const auto& id : p.edge_ids(g)) a.push_back(id);
  return a;
}

inline Json json_condition_L(const Graph& g, const ConditionLResult& r) {
  Json j;
  j["operation"] = "condition_L";
  j["holds"] = r.holds;
  if (r.exitless_cycle) j["exitless_cycle"] = json_path(g, *r.exitless_cycle);
  return j;
}

inline Json json_condition_K(const Graph& g, const ConditionKResult& r) {
  Json j;
  j["operation"] = "condition_K";
  j["holds"] = r.holds;
  if (r.witness_vertex) j["witness_vertex"] = g.vertex_id(*r.witness_vertex);
  if (r.unique_csp) j["unique_closed_simple_path"] = json_path(g, *r.unique_csp);
  return j;
}

inline Json json_csp(const Graph& g, int v, const CspClass& c) {
  Json j;
  j["operation"] = "csp_class";
  j["vertex"] = g.vertex_id(v);
  j["class"] = to_string(c.kind);
  Json w = Json::array();
  for (const Path& p : c.witnesses) w.push_back(json_path(g, p));
  j["witnesses"] = std::move(w);
  return j;
}

inline Json json_lattice(const Graph& g, const Lattice& lat) {
  Json j;
  j["operation"] = "enumerate_lattice";
  j["size"] = lat.size();
  Json m = Json::array();
  for (const VertexSet& s : lat.members) m.push_back(json_ids(g, s));
  j["members"] = std::move(m);
  return j;
}

inline Json json_cofinality(const Graph& g, const CofinalityResult& r) {
  Json j;
  j["operation"] = "is_cofinal";
  j["cofinal"] = r.cofinal;
  j["lattice_checked"] = r.lattice_checked;
  if (r.witness) {
    Json w;
    w["vertex"] = g.vertex_id(r.witness->vertex);
    if (r.witness->avoided_sink) w["avoided_sink"] = g.vertex_id(*r.witness->avoided_sink);
    if (r.witness->avoided_cycle) w["avoided_cycle"] = json_path(g, *r.witness->avoided_cycle);
    j["witness"] = std::move(w);
  }
  return j;
}

inline Json json_fset(const Graph& g, const FSet& f) {
  Json j;
  j["operation"] = "f_set";
  j["finite"] = f.finite;
  if (f.finite) {
    Json ps = Json::array();
    for (const Path& p : f.paths) ps.push_back(json_path(g, p));
    j["paths"] = std::move(ps);
  } else {
    j["witness_cycle"] = json_path(g, *f.witness_cycle);
    j["witness_entry"] = json_path(g, *f.witness_entry);
  }
  return j;
}

inline Json json_graph_summary(const Graph& g) {
  Json j;
  Json vs = Json::array();
  for (const auto& id : g.vertex_ids()) vs.push_back(id);
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const Edge& e : g.edges())
    es.push_back(Json{{"id", e.id}, {"source", g.vertex_id(e.source)}, {"range", g.vertex_id(e.range)}});
  j["edges"] = std::move(es);
  return j;
}

inline Json json_completion_chain(const CompletionChain& c) {
  Json j;
  j["operation"] = "completion_chain";
  j["loop_completed"] = json_graph_summary(c.loop_completed);
  j["exit_completed"] = json_graph_summary(c.exit_completed);
  j["sinks"] = json_ids(c.exit_completed, c.completed_sinks);
  j["sink_free_quotient"] = json_graph_summary(c.sink_free_quotient);
  return j;
}

inline Json json_filtration(const Filtration& f) {
  Json j;
  j["operation"] = "k_filtration";
  Json stages = Json::array();
  for (const Graph& s : f.stages) stages.push_back(json_graph_summary(s));
  j["stages"] = std::move(stages);
  return j;
}

inline Json json_tails(const Graph& g, const std::vector<TailSet>& tails) {
  Json j;
  j["operation"] = "maximal_tails";
  Json a = Json::array();
  for (const TailSet& t : tails) {
    Json e;
    e["members"] = json_ids(g, t.members);
    e["mt1"] = t.mt1;
    e["mt2"] = t.mt2;
    e["mt3"] = t.mt3;
    a.push_back(std::move(e));
  }
  j["tails"] = std::move(a);
  return j;
}

inline Json json_primes(const Graph& g, const std::vector<PrimeEntry>& primes, bool condition_k) {
  Json j;
  j["operation"] = "prime_ideal_report";
  Json a = Json::array();
  for (const PrimeEntry& p : primes)
    a.push_back(Json{{"h", json_ids(g, p.h)}, {"is_prime", p.is_prime}});
  j["ideals"] = std::move(a);
  if (!condition_k)
    j["caveat"] = "condition (K) fails: the ideal lattice may exceed the graded lattice";
  return j;
}

inline Json json_audit(const Graph& g, const ExchangeAudit& a) {
  Json j;
  j["operation"] = "exchange_equivalence_audit";
  j["quotients_satisfy_L"] = a.cond2;
  j["condition_K"] = a.cond3;
  j["all_pairs_satisfy_K"] = a.cond5;
  j["some_pair_satisfies_K"] = a.cond6;
  j["consistent"] = a.consistent();
  if (a.cond2_failure) j["quotient_L_failure_h"] = json_ids(g, *a.cond2_failure);
  return j;
}

inline Json json_rank(const Graph& g, const StableRankVerdict& v) {
  Json j;
  j["operation"] = "stable_rank";
  j["value"] = to_string(v.value);
  j["at_bound"] = v.at_bound;
  if (v.depth) j["depth"] = *v.depth;
  if (v.witness) j["witness_h"] = json_ids(g, *v.witness);
  j["basis"] = v.basis;
  return j;
}

inline Json json_trace(const Graph& g, const std::optional<TraceVector>& t) {
  Json j;
  j["operation"] = "trace_solve";
  j["exists"] = t.has_value();
  if (t) {
    Json vals;
    for (int v = 0; v < g.vertex_count(); ++v) vals[g.vertex_id(v)] = to_string(t->values[v]);
    j["values"] = std::move(vals);
    j["norm"] = to_string(t->norm);
  }
  return j;
}

inline Json json_element(const Graph& g, const MonoidElement& e) {
  Json j;
  for (const auto& [id, k] : e.entries(g)) j[id] = k;
  return j;
}

inline Json json_search_answer(const Graph& g, const SearchAnswer& a) {
  Json j;
  j["verdict"] = to_string(a.verdict);
  j["bound"] = a.bound;
  if (a.yes()) {
    j["start"] = json_element(g, a.start);
    j["end"] = json_element(g, a.end);
    if (a.complement) j["complement"] = json_element(g, *a.complement);
    Json steps = Json::array();
    for (const RewriteStep& s : a.steps)
      steps.push_back(Json{{"vertex", g.vertex_id(s.vertex)}, {"direction", s.expand ? "expand" : "contract"}});
    j["steps"] = std::move(steps);
  }
  return j;
}

inline Json json_x0(const Graph& g, const X0Result& x) {
  Json j;
  j["operation"] = "x0_set";
  j["x0"] = json_ids(g, x.x0);
  j["x0_closure"] = json_ids(g, x.x0_closure);
  return j;
}

inline Json json_classification(const Graph& g, const ClassificationReport& r) {
  Json j;
  j["operation"] = "classify";
  j["empty"] = r.empty_graph;
  if (r.depth) j["depth"] = *r.depth;
  j["condition_L"] = json_condition_L(g, r.cond_l);
  j["condition_K"] = json_condition_K(g, r.cond_k);
  j["exchange"] = r.exchange;
  if (r.lattice_size) j["lattice_size"] = *r.lattice_size;
  if (r.audit) j["audit"] = json_audit(g, *r.audit);
  j["maximal_tails"] = json_tails(g, r.tails);
  j["prime_ideals"] = json_primes(g, r.primes, r.cond_k.holds);
  if (r.pis && r.pis->witness) j["pis_witness_h"] = json_ids(g, *r.pis->witness);
  j["x0"] = json_x0(g, r.x0);
  j["stable_rank"] = json_rank(g, r.rank);
  Json notes = Json::array();
  for (const auto& n : r.annotations) notes.push_back(n);
  j["annotations"] = std::move(notes);
  return j;
}

/// The report envelope: input digest, command, parameters, results.
inline Json make_report(const std::string& command, const std::string& input_digest,
                        Json parameters, Json results) {
  Json j;
  j["format"] = kReportFormat;
  j["command"] = command;
  j["input"] = Json{{"digest", input_digest}};
  j["parameters"] = std::move(parameters);
  j["results"] = std::move(results);
  return j;
}

inline std::string render_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lpa
