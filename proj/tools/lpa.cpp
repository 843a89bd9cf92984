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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lpa/lpa.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::string file;
  std::optional<int> depth;
  std::uint64_t bound = 64;
  int lattice_cap = lpa::kDefaultLatticeCap;
  std::string format = "json";
  std::string set_arg;
  std::string left, right;
  std::string seed_vertices, seed_edges;
  std::string out_file;
  int stages = 0;
  // corpus
  int max_vertices = 3;
  int max_parallel = 2;
  int count = 0;
  bool exhaustive = false;
  std::uint64_t seed = 42;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lpa::StructuralError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& arg) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : arg) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

lpa::VertexSet parse_vertex_set(const lpa::Graph& g, const std::string& arg) {
  return lpa::VertexSet::of(g, split_list(arg));
}

// "v:2,w" means 2 copies of v plus one w
lpa::MonoidElement parse_element(const lpa::Graph& g, const std::string& arg) {
  std::map<std::string, std::uint32_t> entries;
  for (const std::string& item : split_list(arg)) {
    auto colon = item.find(':');
    std::string id = item.substr(0, colon);
    std::uint32_t k = 1;
    if (colon != std::string::npos) k = static_cast<std::uint32_t>(std::stoul(item.substr(colon + 1)));
    entries[id] += k;
  }
  return lpa::MonoidElement::of(g, entries);
}

void write_out(const Options& opt, const std::string& machine, const std::string& human) {
  if (opt.format == "text") {
    std::cout << human;
  } else {
    std::cout << machine;
    std::cerr << human;
  }
  if (!opt.out_file.empty()) {
    std::ofstream out(opt.out_file, std::ios::binary);
    out << machine;
  }
}

std::string describe_set(const lpa::Graph& g, const lpa::VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : s.ids(g)) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  return out + "}";
}

int run_command(const std::string& cmd, const Options& opt) {
  using lpa::Json;

  if (cmd == "corpus") {
    auto emit = [](const lpa::Graph& g) {
      std::cout << Json::parse(lpa::serialize_graph(g)).dump() << "\n";
    };
    if (opt.exhaustive) {
      lpa::exhaustive_corpus_for_each(opt.max_vertices, opt.max_parallel, emit);
    } else {
      lpa::seeded_corpus_for_each(opt.seed, opt.count, opt.max_vertices, opt.max_parallel, emit);
    }
    return kExitOk;
  }

  std::string text = slurp(opt.file);

  if (cmd == "validate") {
    Json res;
    res["operation"] = "validate";
    try {
      lpa::Graph g = lpa::parse_graph(text, opt.depth);
      lpa::ValidationResult r = validate(g);
      res["ok"] = true;
      res["empty"] = r.empty_graph;
      Json rep = lpa::make_report("validate", lpa::digest(lpa::serialize_graph(g)), Json::object(),
                                  Json::array({res}));
      write_out(opt, lpa::render_report(rep),
                std::string("valid graph") + (r.empty_graph ? " (empty)" : "") + "\n");
      return kExitOk;
    } catch (const lpa::StructuralError& e) {
      res["ok"] = false;
      res["issues"] = std::string(e.what());
      Json rep = lpa::make_report("validate", lpa::digest(text), Json::object(), Json::array({res}));
      write_out(opt, lpa::render_report(rep), std::string(e.what()) + "\n");
      return kExitInput;
    }
  }

  lpa::Graph g = lpa::parse_graph(text, opt.depth);
  std::string input_digest = lpa::digest(lpa::serialize_graph(g));
  Json params;
  if (opt.depth) params["depth"] = *opt.depth;
  params["bound"] = opt.bound;
  params["lattice_cap"] = opt.lattice_cap;

  auto graph_output = [&](const lpa::Graph& derived, const std::string& op,
                          const std::vector<std::string>& notes) -> int {
    if (opt.format == "dot") {
      std::cout << lpa::export_dot(derived, notes);
      return kExitOk;
    }
    Json res;
    res["operation"] = op;
    res["graph"] = lpa::json_graph_summary(derived);
    Json rep = lpa::make_report(op, input_digest, params, Json::array({res}));
    std::ostringstream human;
    human << op << ": " << derived.vertex_count() << " vertices, " << derived.edge_count()
          << " edges\n";
    write_out(opt, lpa::render_report(rep), human.str());
    return kExitOk;
  };

  if (cmd == "classify") {
    lpa::ClassificationReport r = lpa::classify(g, opt.lattice_cap);
    Json rep = lpa::make_report("classify", input_digest, params,
                                Json::array({lpa::json_classification(g, r)}));
    std::ostringstream human;
    human << "exchange: " << (r.exchange ? "yes" : "no")
          << "; condition (L): " << (r.cond_l.holds ? "yes" : "no")
          << "; condition (K): " << (r.cond_k.holds ? "yes" : "no")
          << "; stable rank: " << lpa::to_string(r.rank.value);
    if (r.rank.at_bound && r.depth) human << " (at depth " << *r.depth << ")";
    if (r.lattice_size) human << "; lattice size: " << *r.lattice_size;
    human << "; maximal tails: " << r.tails.size() << "\n";
    write_out(opt, lpa::render_report(rep), human.str());
    return kExitOk;
  }
  if (cmd == "closure") {
    lpa::VertexSet x = parse_vertex_set(g, opt.set_arg);
    lpa::VertexSet c = lpa::closure(g, x);
    Json res;
    res["operation"] = "closure";
    res["input_set"] = lpa::json_ids(g, x);
    res["closure"] = lpa::json_ids(g, c);
    Json rep = lpa::make_report("closure", input_digest, params, Json::array({res}));
    write_out(opt, lpa::render_report(rep), "closure: " + describe_set(g, c) + "\n");
    return kExitOk;
  }
  if (cmd == "lattice") {
    lpa::Lattice lat = lpa::enumerate_lattice(g, opt.lattice_cap);
    Json rep =
        lpa::make_report("lattice", input_digest, params, Json::array({lpa::json_lattice(g, lat)}));
    std::ostringstream human;
    human << "hereditary saturated subsets: " << lat.size() << "\n";
    write_out(opt, lpa::render_report(rep), human.str());
    return kExitOk;
  }
  if (cmd == "quotient") {
    lpa::VertexSet h = parse_vertex_set(g, opt.set_arg);
    return graph_output(lpa::quotient_graph(g, h), "quotient_graph",
                        {"quotient of input " + input_digest + " by H=" + describe_set(g, h)});
  }
  if (cmd == "restrict") {
    lpa::VertexSet h = parse_vertex_set(g, opt.set_arg);
    return graph_output(lpa::restriction_graph(g, h), "restriction_graph",
                        {"restriction of input " + input_digest + " to H=" + describe_set(g, h)});
  }
  if (cmd == "hgraph") {
    lpa::VertexSet h = parse_vertex_set(g, opt.set_arg);
    return graph_output(lpa::h_graph(g, h), "h_graph",
                        {"ideal graph of input " + input_digest + " at H=" + describe_set(g, h),
                         "first-entry paths appear as bracketed vertices"});
  }
  if (cmd == "tails") {
    auto tails = lpa::maximal_tails(g, opt.lattice_cap);
    Json rep = lpa::make_report(
        "tails", input_digest, params,
        Json::array({lpa::json_tails(g, tails),
                     lpa::json_primes(g, lpa::prime_ideal_report(g, opt.lattice_cap),
                                      lpa::condition_K(g).holds)}));
    std::ostringstream human;
    human << "maximal tails: " << tails.size() << "\n";
    for (const auto& t : tails) human << "  " << describe_set(g, t.members) << "\n";
    write_out(opt, lpa::render_report(rep), human.str());
    return kExitOk;
  }
  if (cmd == "stable-rank") {
    lpa::StableRankVerdict v = lpa::stable_rank(g, opt.lattice_cap);
    Json rep =
        lpa::make_report("stable-rank", input_digest, params, Json::array({lpa::json_rank(g, v)}));
    std::ostringstream human;
    human << "stable rank: " << lpa::to_string(v.value);
    if (v.at_bound && v.depth) human << " (at depth " << *v.depth << ")";
    human << " [" << v.basis << "]\n";
    write_out(opt, lpa::render_report(rep), human.str());
    return kExitOk;
  }
  if (cmd == "trace") {
    auto t = lpa::trace_solve(g);
    Json rep = lpa::make_report("trace", input_digest, params, Json::array({lpa::json_trace(g, t)}));
    std::ostringstream human;
    if (t) {
      human << "norm-1 graph trace:";
      for (int v = 0; v < g.vertex_count(); ++v)
        human << " " << g.vertex_id(v) << "=" << lpa::to_string(t->values[v]);
      human << "\n";
    } else {
      human << "no nonzero graph trace\n";
    }
    write_out(opt, lpa::render_report(rep), human.str());
    return kExitOk;
  }
  if (cmd == "monoid-leq") {
    lpa::MonoidElement a = parse_element(g, opt.left);
    lpa::MonoidElement b = parse_element(g, opt.right);
    lpa::SearchAnswer ans = lpa::monoid_leq(g, a, b, opt.bound);
    if (ans.yes() && !lpa::certificate_replays(g, ans))
      throw lpa::InternalError("comparability certificate does not replay");
    Json res = lpa::json_search_answer(g, ans);
    res["operation"] = "monoid_leq";
    Json rep = lpa::make_report("monoid-leq", input_digest, params, Json::array({res}));
    write_out(opt, lpa::render_report(rep),
              std::string("comparable: ") + lpa::to_string(ans.verdict) + "\n");
    return kExitOk;
  }
  if (cmd == "filtration") {
    int n = opt.stages > 0 ? opt.stages : g.vertex_count();
    lpa::Filtration f = lpa::k_filtration(g, n);
    Json rep =
        lpa::make_report("filtration", input_digest, params, Json::array({lpa::json_filtration(f)}));
    std::ostringstream human;
    human << "filtration stages: " << f.stages.size() << "; final stage "
          << f.stages.back().vertex_count() << " vertices / " << f.stages.back().edge_count()
          << " edges\n";
    write_out(opt, lpa::render_report(rep), human.str());
    return kExitOk;
  }
  if (cmd == "completions") {
    std::vector<std::string> tv = split_list(opt.seed_vertices);
    std::vector<std::array<std::string, 3>> te;
    for (const std::string& id : split_list(opt.seed_edges)) {
      const lpa::Edge& e = g.edge(g.edge_index(id));
      te.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
    }
    lpa::Graph t = lpa::Graph::build(tv, te);
    lpa::CompletionChain c = lpa::completion_chain(g, t);
    if (opt.format == "dot") {
      std::cout << lpa::export_dot(c.sink_free_quotient,
                                   {"sink-free completion quotient of input " + input_digest});
      return kExitOk;
    }
    Json rep = lpa::make_report("completions", input_digest, params,
                                Json::array({lpa::json_completion_chain(c)}));
    std::ostringstream human;
    human << "loop completion: " << c.loop_completed.vertex_count() << "v/"
          << c.loop_completed.edge_count() << "e; exit completion: "
          << c.exit_completed.vertex_count() << "v/" << c.exit_completed.edge_count()
          << "e; quotient: " << c.sink_free_quotient.vertex_count() << "v/"
          << c.sink_free_quotient.edge_count() << "e\n";
    write_out(opt, lpa::render_report(rep), human.str());
    return kExitOk;
  }
  throw lpa::InternalError("unhandled command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-theoretic classification of Leavitt path algebras"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--depth", opt.depth, "truncation depth for generated graphs");
  app.add_option("--bound", opt.bound, "total-multiplicity cap for monoid searches");
  app.add_option("--lattice-cap", opt.lattice_cap, "vertex cap for lattice enumeration");
  app.add_option("--format", opt.format, "output format: json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("-o,--output", opt.out_file, "also write the machine report to a file");

  auto add_file = [&](CLI::App* sub) {
    sub->fallthrough();  // global flags may follow the subcommand
    sub->add_option("file", opt.file, "graph document")->required();
    return sub;
  };
  add_file(app.add_subcommand("validate", "check the structural invariants"));
  add_file(app.add_subcommand("classify", "full classification report"));
  auto* closure_cmd =
      add_file(app.add_subcommand("closure", "hereditary saturated closure of a vertex set"));
  closure_cmd->add_option("--set", opt.set_arg, "comma-separated vertex ids")->required();
  add_file(app.add_subcommand("lattice", "enumerate hereditary saturated subsets"));
  auto* quotient_cmd = add_file(app.add_subcommand("quotient", "quotient graph E/H"));
  quotient_cmd->add_option("--set", opt.set_arg, "the hereditary set H")->required();
  auto* restrict_cmd = add_file(app.add_subcommand("restrict", "restriction graph E_H"));
  restrict_cmd->add_option("--set", opt.set_arg, "the vertex set H")->required();
  auto* hgraph_cmd =
      add_file(app.add_subcommand("hgraph", "ideal graph on H and its first-entry paths"));
  hgraph_cmd->add_option("--set", opt.set_arg, "the hereditary set H")->required();
  add_file(app.add_subcommand("tails", "maximal tails and prime ideals"));
  add_file(app.add_subcommand("stable-rank", "stable rank trichotomy verdict"));
  add_file(app.add_subcommand("trace", "solve for a norm-1 graph trace"));
  auto* leq_cmd = add_file(app.add_subcommand("monoid-leq", "decide comparability in the graph monoid"));
  leq_cmd->add_option("--left", opt.left, "element, e.g. v:2,w")->required();
  leq_cmd->add_option("--right", opt.right, "element, e.g. u")->required();
  auto* filt_cmd =
      add_file(app.add_subcommand("filtration", "condition (K) filtration by finite subgraphs"));
  filt_cmd->add_option("--stages", opt.stages, "stage count (default: vertex count)");
  auto* comp_cmd = add_file(app.add_subcommand("completions", "loop/exit completion chain from a seed"));
  comp_cmd->add_option("--seed-vertices", opt.seed_vertices, "comma-separated vertex ids")->required();
  comp_cmd->add_option("--seed-edges", opt.seed_edges, "comma-separated edge ids");
  auto* corpus_cmd = app.add_subcommand("corpus", "enumerate small multigraphs");
  corpus_cmd->fallthrough();
  corpus_cmd->add_option("--max-vertices", opt.max_vertices, "vertex bound");
  corpus_cmd->add_option("--max-parallel", opt.max_parallel, "parallel edge bound");
  corpus_cmd->add_flag("--exhaustive", opt.exhaustive, "enumerate everything within bounds");
  corpus_cmd->add_option("--count", opt.count, "number of seeded graphs");
  corpus_cmd->add_option("--seed", opt.seed, "stream seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    return run_command(app.get_subcommands().front()->get_name(), opt);
  } catch (const lpa::InternalError& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const lpa::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const lpa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
