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

#include "lpa/graph.hpp"

namespace lpa::testing {

// u -> v -> w
inline Graph chain3() {
  return Graph::build({"u", "v", "w"}, {{{"e1", "u", "v"}}, {{"e2", "v", "w"}}});
}

// one vertex w with a single loop
inline Graph loop1() { return Graph::build({"w"}, {{{"l", "w", "w"}}}); }

// one vertex v with two loops
inline Graph rose2() { return Graph::build({"v"}, {{{"a", "v", "v"}}, {{"b", "v", "v"}}}); }

// rose2 plus an edge into a sink w
inline Graph rose2_sink() {
  return Graph::build({"v", "w"}, {{{"a", "v", "v"}}, {{"b", "v", "v"}}, {{"c", "v", "w"}}});
}

// u -> v
inline Graph two_chain() { return Graph::build({"u", "v"}, {{{"e", "u", "v"}}}); }

// two disjoint copies of rose2
inline Graph double_rose() {
  return Graph::build({"v1", "v2"}, {{{"a1", "v1", "v1"}},
                                     {{"b1", "v1", "v1"}},
                                     {{"a2", "v2", "v2"}},
                                     {{"b2", "v2", "v2"}}});
}

// loop at w plus an entry edge u -> w
inline Graph loop_with_entry() {
  return Graph::build({"u", "w"}, {{{"l", "w", "w"}}, {{"in", "u", "w"}}});
}

// two 2-cycles sharing the vertex w: u <-> w and w <-> z
inline Graph shared_vertex_cycles() {
  return Graph::build({"u", "w", "z"},
                      {{{"uw", "u", "w"}}, {{"wu", "w", "u"}}, {{"wz", "w", "z"}}, {{"zw", "z", "w"}}});
}

inline Graph single_sink() { return Graph::build({"s"}, {}); }

inline Graph empty_graph() { return Graph::build({}, {}); }

}  // namespace lpa::testing
