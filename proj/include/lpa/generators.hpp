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

#include "lpa/graph.hpp"

namespace lpa {

/// Shipped infinite families, truncated at a chosen depth. Each is a pure
/// function of the depth, and the depth-d vertex list is a prefix of the
/// depth-(d+1) one.
///   rose_ladder:   v_i carries two loops and v_{i+1} -> v_i.
///   forward_chain: v_i -> v_{i+1}.
///   two_way_chain: v_i -> v_{i+1} and v_{i+1} -> v_i.
/// "paper_chain" is accepted as a legacy alias of two_way_chain.
inline bool known_generator_family(const std::string& family) {
  return family == "rose_ladder" || family == "forward_chain" || family == "two_way_chain" ||
         family == "paper_chain";
}

inline Graph expand_generator(const std::string& family, int depth) {
  if (!known_generator_family(family))
    throw PreconditionError("unknown generator family '" + family + "'");
  if (depth < 0) throw PreconditionError("generator depth must be non-negative");
  std::vector<std::string> vs;
  std::vector<std::array<std::string, 3>> es;
  for (int i = 1; i <= depth; ++i) vs.push_back("v" + std::to_string(i));
  if (family == "rose_ladder") {
    for (int i = 1; i <= depth; ++i) {
      std::string v = "v" + std::to_string(i);
      es.push_back({v + "a", v, v});
      es.push_back({v + "b", v, v});
      if (i >= 2) es.push_back({v + "down", v, "v" + std::to_string(i - 1)});
    }
  } else if (family == "forward_chain") {
    for (int i = 1; i < depth; ++i)
      es.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
  } else {  // two_way_chain / paper_chain
    for (int i = 1; i < depth; ++i) {
      es.push_back({"f" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
      es.push_back({"b" + std::to_string(i), "v" + std::to_string(i + 1), "v" + std::to_string(i)});
    }
  }
  return Graph::build(std::move(vs), es, GeneratorInfo{family, depth});
}

/// The same family at a deeper truncation; used to detect results that
/// are artifacts of the cut.
inline Graph expand_deeper(const Graph& g, int extra_depth) {
  if (!g.generator()) throw PreconditionError("graph is not a generated truncation");
  return expand_generator(g.generator()->family, g.generator()->depth + extra_depth);
}

}  // namespace lpa
