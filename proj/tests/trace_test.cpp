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

#include "lpa/trace.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lpa/generators.hpp"
#include "oracles.hpp"

namespace lpa {
namespace {

using testing::chain3;
using testing::rose2;
using testing::rose2_sink;
using testing::single_sink;

TEST(Trace, Chain3IsUniformThirds) {
  Graph g = chain3();
  auto t = trace_solve(g);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->values[0], Rational(1, 3));
  EXPECT_EQ(t->values[1], Rational(1, 3));
  EXPECT_EQ(t->values[2], Rational(1, 3));
  EXPECT_EQ(t->norm, 1);
  EXPECT_TRUE(t->satisfies_equalities(g));
  EXPECT_TRUE(testing::oracle_trace_exists(g));
}

TEST(Trace, Rose2HasNone) {
  EXPECT_FALSE(trace_solve(rose2()).has_value());
  EXPECT_FALSE(testing::oracle_trace_exists(rose2()));
}

TEST(Trace, SingleSinkIsFree) {
  Graph g = single_sink();
  auto t = trace_solve(g);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->values[0], 1);
}

TEST(Trace, Rose2SinkForcesZero) {
  // g(v) = 2 g(v) + g(w) forces everything to zero
  EXPECT_FALSE(trace_solve(rose2_sink()).has_value());
  EXPECT_FALSE(testing::oracle_trace_exists(rose2_sink()));
}

TEST(Trace, RoseLadderTruncationHasNone) {
  Graph g = expand_generator("rose_ladder", 4);
  EXPECT_FALSE(trace_solve(g).has_value());
  EXPECT_FALSE(testing::oracle_trace_exists(g));
}

TEST(Trace, ForwardChainIsUniform) {
  Graph g = expand_generator("forward_chain", 5);
  auto t = trace_solve(g);
  ASSERT_TRUE(t.has_value());
  for (const auto& x : t->values) EXPECT_EQ(x, Rational(1, 5));
}

TEST(Trace, TwoWayChainHasNone) {
  // interior equalities g_i = g_{i-1} + g_{i+1} cascade to zero
  Graph g = expand_generator("two_way_chain", 3);
  EXPECT_FALSE(trace_solve(g).has_value());
  EXPECT_FALSE(testing::oracle_trace_exists(g));
}

TEST(Trace, EmptyGraphHasNone) { EXPECT_FALSE(trace_solve(testing::empty_graph()).has_value()); }

TEST(Trace, SolutionIsExactOnABranchyGraph) {
  // s -> a, s -> b, with sinks a and b: g(s) = g(a) + g(b)
  Graph g = Graph::build({"s", "a", "b"}, {{{"e1", "s", "a"}}, {{"e2", "s", "b"}}});
  auto t = trace_solve(g);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(t->satisfies_equalities(g));
  Rational sum = t->values[0] + t->values[1] + t->values[2];
  EXPECT_EQ(sum, 1);
  EXPECT_TRUE(testing::oracle_trace_exists(g));
}

}  // namespace
}  // namespace lpa
