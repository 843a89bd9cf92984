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

#include "lpa/cycles.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace lpa {
namespace {

using testing::chain3;
using testing::loop1;
using testing::rose2;
using testing::rose2_sink;
using testing::shared_vertex_cycles;

TEST(SimpleCycles, Rose2HasTwoLoops) {
  Graph g = rose2();
  auto cycles = simple_cycles(g);
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_EQ(cycles[0].edge_ids(g), std::vector<std::string>{"a"});
  EXPECT_EQ(cycles[1].edge_ids(g), std::vector<std::string>{"b"});
}

TEST(SimpleCycles, Chain3HasNone) { EXPECT_TRUE(simple_cycles(chain3()).empty()); }

TEST(SimpleCycles, SharedVertexGraph) {
  Graph g = shared_vertex_cycles();
  auto cycles = simple_cycles(g);
  EXPECT_EQ(cycles.size(), 2u);  // u<->w and w<->z, no longer simple cycles
}

TEST(SimpleCycles, CapIsAnError) {
  Graph g = rose2();
  EXPECT_THROW(simple_cycles(g, 1), ResourceError);
}

TEST(ConditionL, Loop1FailsWithTheLoop) {
  Graph g = loop1();
  ConditionLResult r = condition_L(g);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.exitless_cycle->edge_ids(g), std::vector<std::string>{"l"});
}

TEST(ConditionL, Rose2AndChain3Hold) {
  EXPECT_TRUE(condition_L(rose2()).holds);
  EXPECT_TRUE(condition_L(chain3()).holds);
}

TEST(ConditionL, MatchesCycleEnumeration) {
  for (const Graph& g : {chain3(), loop1(), rose2(), rose2_sink(), shared_vertex_cycles()}) {
    bool by_enum = true;
    for (const Path& c : simple_cycles(g))
      if (!has_exit(g, c)) by_enum = false;
    EXPECT_EQ(condition_L(g).holds, by_enum);
  }
}

TEST(CspClass, Loop1IsOne) {
  Graph g = loop1();
  CspClass c = csp_class(g, "w");
  EXPECT_EQ(c.kind, CspClass::Kind::One);
  ASSERT_EQ(c.witnesses.size(), 1u);
  EXPECT_EQ(c.witnesses[0].edge_ids(g), std::vector<std::string>{"l"});
  EXPECT_EQ(testing::oracle_csp_count_class(g, g.vertex_index("w")), 1);
}

TEST(CspClass, Rose2IsTwoOrMoreWithLengthOneWitnesses) {
  Graph g = rose2();
  CspClass c = csp_class(g, "v");
  EXPECT_EQ(c.kind, CspClass::Kind::TwoOrMore);
  ASSERT_EQ(c.witnesses.size(), 2u);
  EXPECT_EQ(c.witnesses[0].edge_ids(g), std::vector<std::string>{"a"});
  EXPECT_EQ(c.witnesses[1].edge_ids(g), std::vector<std::string>{"b"});
  EXPECT_EQ(testing::oracle_csp_count_class(g, g.vertex_index("v")), 2);
}

TEST(CspClass, Chain3IsZero) {
  Graph g = chain3();
  EXPECT_EQ(csp_class(g, "u").kind, CspClass::Kind::Zero);
  EXPECT_EQ(testing::oracle_csp_count_class(g, g.vertex_index("u")), 0);
}

TEST(CspClass, WitnessesMatchOracleOrder) {
  Graph g = shared_vertex_cycles();
  for (int v = 0; v < g.vertex_count(); ++v) {
    CspClass c = csp_class(g, v);
    auto expect = testing::oracle_csp_list(g, v, 2, testing::oracle_csp_walk_bound(g));
    ASSERT_EQ(c.witnesses.size(), expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i)
      EXPECT_EQ(c.witnesses[i].edge_ids(g), expect[i]);
  }
}

TEST(CspClass, WitnessesAreValidClosedSimplePaths) {
  for (const Graph& g : {rose2(), rose2_sink(), shared_vertex_cycles(), loop1()}) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      CspClass c = csp_class(g, v);
      for (const Path& w : c.witnesses) ASSERT_TRUE(is_closed_simple_path(g, v, w));
      if (c.kind == CspClass::Kind::TwoOrMore) {
        ASSERT_EQ(c.witnesses.size(), 2u);
        ASSERT_FALSE(c.witnesses[0] == c.witnesses[1]);
      }
      if (c.kind == CspClass::Kind::One) {
        ASSERT_EQ(c.witnesses.size(), 1u);
      }
    }
  }
}

TEST(CspClass, ClosedSimplePathPredicate) {
  Graph g = shared_vertex_cycles();
  int u = g.vertex_index("u");
  Path around{{g.edge_index("uw"), g.edge_index("wu")}};
  EXPECT_TRUE(is_closed_simple_path(g, u, around));
  Path detour{{g.edge_index("uw"), g.edge_index("wz"), g.edge_index("zw"), g.edge_index("wu")}};
  EXPECT_TRUE(is_closed_simple_path(g, u, detour));  // w repeats, u does not
  Path twice{{g.edge_index("uw"), g.edge_index("wu"), g.edge_index("uw"), g.edge_index("wu")}};
  EXPECT_FALSE(is_closed_simple_path(g, u, twice));  // revisits the base
  EXPECT_FALSE(is_closed_simple_path(g, g.vertex_index("w"), around));
}

TEST(ConditionK, Examples) {
  EXPECT_TRUE(condition_K(rose2()).holds);
  EXPECT_TRUE(condition_K(chain3()).holds);
  ConditionKResult r = condition_K(loop1());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(*r.witness_vertex, 0);
  Graph g = loop1();
  EXPECT_EQ(r.unique_csp->edge_ids(g), std::vector<std::string>{"l"});
}

TEST(ConditionK, SharedVertexCyclesSatisfyK) {
  EXPECT_TRUE(condition_K(shared_vertex_cycles()).holds);
}

}  // namespace
}  // namespace lpa
