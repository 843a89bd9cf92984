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

#include "lpa/hersat.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace lpa {
namespace {

using testing::chain3;
using testing::double_rose;
using testing::empty_graph;
using testing::loop1;
using testing::rose2;
using testing::rose2_sink;

VertexSet ids(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet s(g.vertex_count());
  for (const char* n : names) s.add(g.vertex_index(n));
  return s;
}

TEST(Hereditary, Examples) {
  Graph rs = rose2_sink();
  EXPECT_TRUE(is_hereditary(rs, ids(rs, {"w"})));
  EXPECT_TRUE(is_saturated(rs, ids(rs, {"w"})));
  EXPECT_TRUE(testing::oracle_hereditary(rs, ids(rs, {"w"}).mask()));
  EXPECT_TRUE(testing::oracle_saturated(rs, ids(rs, {"w"}).mask()));

  Graph c = chain3();
  EXPECT_FALSE(is_hereditary(c, ids(c, {"v"})));
  EXPECT_TRUE(is_hereditary(c, ids(c, {"w"})));
  EXPECT_FALSE(is_saturated(c, ids(c, {"w"})));
  EXPECT_FALSE(testing::oracle_saturated(c, ids(c, {"w"}).mask()));
}

TEST(Hereditary, CacheIsFilledAndAgrees) {
  Graph c = chain3();
  VertexSet s = ids(c, {"w"});
  EXPECT_FALSE(s.cached_hereditary.has_value());
  is_hereditary(c, s);
  ASSERT_TRUE(s.cached_hereditary.has_value());
  EXPECT_EQ(*s.cached_hereditary, testing::oracle_hereditary(c, s.mask()));
  s.add(c.vertex_index("v"));
  EXPECT_FALSE(s.cached_hereditary.has_value());
}

TEST(LambdaStep, Examples) {
  Graph c = chain3();
  EXPECT_EQ(lambda_step(c, ids(c, {"w"})).ids(c), (std::vector<std::string>{"v", "w"}));
  EXPECT_TRUE(lambda_step(c, VertexSet(c.vertex_count())).none());
  Graph rs = rose2_sink();
  EXPECT_EQ(lambda_step(rs, ids(rs, {"w"})).ids(rs), std::vector<std::string>{"w"});
}

TEST(Closure, ExamplesAgainstSubsetOracle) {
  Graph c = chain3();
  EXPECT_EQ(closure(c, ids(c, {"w"})).mask(), testing::oracle_closure_mask(c, ids(c, {"w"}).mask()));
  EXPECT_EQ(closure(c, ids(c, {"w"})).ids(c), (std::vector<std::string>{"u", "v", "w"}));
  EXPECT_TRUE(closure(c, VertexSet(c.vertex_count())).none());
  Graph rs = rose2_sink();
  EXPECT_EQ(closure(rs, ids(rs, {"v"})).ids(rs), (std::vector<std::string>{"v", "w"}));
  EXPECT_EQ(closure(rs, ids(rs, {"v"})).mask(), testing::oracle_closure_mask(rs, ids(rs, {"v"}).mask()));
}

TEST(Lattice, Rose2SinkHasThreeMembers) {
  Graph g = rose2_sink();
  Lattice lat = enumerate_lattice(g);
  ASSERT_EQ(lat.size(), 3u);
  EXPECT_TRUE(lat.members[0].none());
  EXPECT_EQ(lat.members[1].ids(g), std::vector<std::string>{"w"});
  EXPECT_TRUE(lat.members[2].is_full());
}

TEST(Lattice, Loop1AndChain3) {
  EXPECT_EQ(enumerate_lattice(loop1()).size(), 2u);
  Graph c = chain3();
  Lattice lat = enumerate_lattice(c);
  auto oracle = testing::oracle_lattice_masks(c);
  ASSERT_EQ(lat.size(), oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) EXPECT_EQ(lat.members[i].mask(), oracle[i]);
  EXPECT_EQ(lat.size(), 2u);  // only the trivial pair: {w} and {v,w} are not saturated
}

TEST(Lattice, CapIsAResourceError) {
  std::vector<std::string> vs;
  for (int i = 0; i < 25; ++i) vs.push_back("x" + std::to_string(i));
  Graph big = Graph::build(vs, {});
  EXPECT_THROW(enumerate_lattice(big), ResourceError);
}

TEST(Quotient, Rose2SinkByWIsRose2) {
  Graph g = rose2_sink();
  Graph q = quotient_graph(g, ids(g, {"w"}));
  EXPECT_EQ(q.vertex_ids(), std::vector<std::string>{"v"});
  ASSERT_EQ(q.edge_count(), 2);
  EXPECT_EQ(q.edge(0).id, "a");
  EXPECT_EQ(q.edge(1).id, "b");
}

TEST(Quotient, EmptySetIsIdentityAndFullSetIsEmptyGraph) {
  Graph g = chain3();
  Graph same = quotient_graph(g, VertexSet(g.vertex_count()));
  EXPECT_EQ(same.vertex_ids(), g.vertex_ids());
  EXPECT_EQ(same.edge_count(), g.edge_count());
  Graph none = quotient_graph(g, VertexSet::full(g.vertex_count()));
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(none.edge_count(), 0);
}

TEST(Quotient, RequiresHereditary) {
  Graph g = chain3();
  EXPECT_THROW(quotient_graph(g, ids(g, {"u"})), PreconditionError);
}

TEST(Restriction, Examples) {
  Graph g = rose2_sink();
  Graph r = restriction_graph(g, ids(g, {"w"}));
  EXPECT_EQ(r.vertex_ids(), std::vector<std::string>{"w"});
  EXPECT_EQ(r.edge_count(), 0);
  Graph whole = restriction_graph(g, VertexSet::full(g.vertex_count()));
  EXPECT_EQ(whole.edge_count(), g.edge_count());
  Graph c = chain3();
  Graph vw = restriction_graph(c, ids(c, {"v", "w"}));
  ASSERT_EQ(vw.edge_count(), 1);
  EXPECT_EQ(vw.edge(0).id, "e2");
}

TEST(Restriction, NonHereditarySetDangles) {
  Graph c = chain3();
  EXPECT_THROW(restriction_graph(c, ids(c, {"u"})), StructuralError);
}

TEST(Cofinal, Rose2AndChain3AreCofinal) {
  CofinalityResult a = is_cofinal(rose2());
  EXPECT_TRUE(a.cofinal);
  EXPECT_TRUE(a.lattice_checked);
  EXPECT_TRUE(is_cofinal(chain3()).cofinal);
  EXPECT_TRUE(is_cofinal(empty_graph()).cofinal);
}

TEST(Cofinal, Rose2SinkFailsAtTheSink) {
  Graph g = rose2_sink();
  CofinalityResult r = is_cofinal(g);
  ASSERT_FALSE(r.cofinal);
  EXPECT_TRUE(r.lattice_checked);
  EXPECT_EQ(g.vertex_id(r.witness->vertex), "w");
  ASSERT_TRUE(r.witness->avoided_cycle.has_value());
  EXPECT_EQ(r.witness->avoided_cycle->edge_ids(g), std::vector<std::string>{"a"});
}

TEST(Cofinal, DisjointRosesAreNot) { EXPECT_FALSE(is_cofinal(double_rose()).cofinal); }

TEST(Projsather, Examples) {
  Graph g = rose2_sink();
  ProjsatherCheck c = projsather_check(g, ids(g, {"w"}), ids(g, {"w"}));
  EXPECT_TRUE(c.in_parent);
  EXPECT_TRUE(c.in_restriction);
  ProjsatherCheck e = projsather_check(g, ids(g, {"w"}), VertexSet(g.vertex_count()));
  EXPECT_TRUE(e.in_parent);
  EXPECT_TRUE(e.agree());
  ProjsatherCheck full = projsather_check(g, VertexSet::full(g.vertex_count()), ids(g, {"w"}));
  EXPECT_TRUE(full.agree());
}

TEST(Lattice, MeetAndJoin) {
  Graph g = double_rose();
  Lattice lat = enumerate_lattice(g);
  EXPECT_EQ(lat.size(), 4u);
  VertexSet a = ids(g, {"v1"}), b = ids(g, {"v2"});
  EXPECT_TRUE(lattice_meet(a, b).none());
  EXPECT_TRUE(lattice_join(g, a, b).is_full());
}

}  // namespace
}  // namespace lpa
