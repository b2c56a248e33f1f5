// Copyright 2026 The hypgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPGRAPH_TESTS_FIXTURES_HPP
#define HYPGRAPH_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "hypgraph/graph.hpp"
#include "hypgraph/rng.hpp"

namespace hypgraph::fixtures {

inline Graph path_graph(Vertex n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v - 1, v});
  return Graph::from_edges(n, es);
}

inline Graph cycle_graph(Vertex n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v - 1, v});
  es.push_back({0, n - 1});
  return Graph::from_edges(n, es);
}

inline Graph star_graph(Vertex leaves) {
  std::vector<Edge> es;
  for (Vertex v = 1; v <= leaves; ++v) es.push_back({0, v});
  return Graph::from_edges(leaves + 1, es);
}

inline Graph complete_graph(Vertex n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

// K_n minus k pairwise disjoint edges {0,1}, {2,3}, ...
inline Graph complete_minus_matching(Vertex n, Vertex k) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      const bool removed = v == u + 1 && u % 2 == 0 && u / 2 < k;
      if (!removed) es.push_back({u, v});
    }
  return Graph::from_edges(n, es);
}

// Vertices in level order; children of i are 2i+1 and 2i+2.
inline Graph complete_binary_tree(int depth) {
  const Vertex n = static_cast<Vertex>((1u << (depth + 1)) - 1);
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({(v - 1) / 2, v});
  return Graph::from_edges(n, es);
}

// Uniform random attachment tree: parent of v drawn below v.
inline Graph random_tree(Vertex n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v)
    es.push_back({static_cast<Vertex>(rng.next_below(v)), v});
  return Graph::from_edges(n, es);
}

// Outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({i, i + 5});
    es.push_back({i + 5, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, es);
}

// The metric invariant corpus: named graphs the suites sweep over.
inline std::vector<std::pair<std::string, Graph>> named_corpus() {
  std::vector<std::pair<std::string, Graph>> out;
  out.emplace_back("P2", path_graph(2));
  out.emplace_back("P5", path_graph(5));
  out.emplace_back("P12", path_graph(12));
  out.emplace_back("star5", star_graph(5));
  out.emplace_back("star20", star_graph(20));
  out.emplace_back("binary_tree3", complete_binary_tree(3));
  out.emplace_back("random_tree40", random_tree(40, 7));
  out.emplace_back("C4", cycle_graph(4));
  out.emplace_back("C5", cycle_graph(5));
  out.emplace_back("C6", cycle_graph(6));
  out.emplace_back("C7", cycle_graph(7));
  out.emplace_back("C8", cycle_graph(8));
  out.emplace_back("petersen", petersen_graph());
  out.emplace_back("K4", complete_graph(4));
  out.emplace_back("K9", complete_graph(9));
  out.emplace_back("K20", complete_graph(20));
  out.emplace_back("K12_minus_e", complete_minus_matching(12, 1));
  out.emplace_back("K12_minus_2m", complete_minus_matching(12, 2));
  out.emplace_back("K15_minus_5m", complete_minus_matching(15, 5));
  return out;
}

}  // namespace hypgraph::fixtures

#endif  // HYPGRAPH_TESTS_FIXTURES_HPP
