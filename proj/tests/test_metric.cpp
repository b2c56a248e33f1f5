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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "hypgraph/metric.hpp"
#include "hypgraph/reference.hpp"
#include "hypgraph/rng.hpp"

using namespace hypgraph;

TEST_CASE("apsp on P4 and K5") {
  const DistanceMatrix p4 = apsp(fixtures::path_graph(4));
  int max = 0;
  for (Vertex v = 0; v < 4; ++v)
    for (Vertex u = 0; u < 4; ++u) max = std::max<int>(max, p4(u, v));
  CHECK(max == 3);

  const DistanceMatrix k5 = apsp(fixtures::complete_graph(5));
  for (Vertex v = 0; v < 5; ++v)
    for (Vertex u = 0; u < 5; ++u)
      CHECK(k5(u, v) == (u == v ? 0 : 1));
}

TEST_CASE("apsp on the Petersen graph against the serial reference") {
  const Graph g = fixtures::petersen_graph();
  const DistanceMatrix fast = apsp(g);
  const DistanceMatrix slow = reference::apsp(g);
  int max = 0;
  for (Vertex v = 0; v < 10; ++v)
    for (Vertex u = 0; u < 10; ++u) {
      CHECK(fast(u, v) == slow(u, v));
      max = std::max<int>(max, fast(u, v));
    }
  CHECK(max == 2);
}

TEST_CASE("apsp rows equal independent single-source BFS") {
  const Graph g = gen_gnp({400, 0.02, 13});
  const DistanceMatrix d = apsp(g);
  SplitMix64 rng(5);
  for (int spot = 0; spot < 20; ++spot) {
    const auto v = static_cast<Vertex>(rng.next_below(400));
    const auto row = reference::bfs_distances(g, v);
    for (Vertex u = 0; u < 400; ++u) {
      const int expected = row[u] < 0 ? kInfiniteDistance : row[u];
      CHECK(d(v, u) == expected);
    }
  }
}

TEST_CASE("apsp metric invariants on the corpus plus random graphs") {
  auto corpus = fixtures::named_corpus();
  for (std::uint64_t s = 0; s < 10; ++s)
    corpus.emplace_back("gnp" + std::to_string(s),
                        gen_gnp({60, 0.1 + 0.08 * static_cast<double>(s), s}));
  for (const auto& [name, g] : corpus) {
    CAPTURE(name);
    const Vertex n = g.vertex_count();
    const DistanceMatrix d = apsp(g);
    for (Vertex v = 0; v < n; ++v) {
      CHECK(d(v, v) == 0);
      for (Vertex u = 0; u < n; ++u) {
        CHECK(d(u, v) == d(v, u));
        if (u != v) CHECK((d(u, v) == 1) == g.has_edge(u, v));
      }
    }
    SplitMix64 rng(17);
    for (int t = 0; t < 10000; ++t) {
      const auto a = static_cast<Vertex>(rng.next_below(n));
      const auto b = static_cast<Vertex>(rng.next_below(n));
      const auto c = static_cast<Vertex>(rng.next_below(n));
      if (d(a, b) == kInfiniteDistance || d(b, c) == kInfiniteDistance ||
          d(a, c) == kInfiniteDistance)
        continue;
      CHECK(d(a, c) <= d(a, b) + d(b, c));
    }
  }
}

TEST_CASE("apsp capacity errors") {
  ApspOptions opts;
  opts.max_matrix_bytes = 100;
  CHECK_THROWS_AS(apsp(fixtures::path_graph(50), opts), CapacityError);
  CHECK_THROWS_AS(apsp(fixtures::path_graph(300)), CapacityError);
}

TEST_CASE("diameter of named graphs") {
  CHECK(diameter(fixtures::cycle_graph(6)).diameter == 3);
  CHECK(diameter(fixtures::path_graph(5)).diameter == 4);
  // K4 minus one edge
  CHECK(diameter(fixtures::complete_minus_matching(4, 1)).diameter == 2);
}

TEST_CASE("diameter handles disconnected graphs per component") {
  const Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
  const DiameterReport rep = diameter(g);
  CHECK_FALSE(rep.connected);
  CHECK_FALSE(rep.diameter.has_value());
  CHECK(rep.component_diameters == std::vector<int>{1, 2});
  CHECK(rep.max_component_diameter == 2);
  CHECK(rep.eccentricities == std::vector<int>{1, 1, 2, 1, 2});
}

TEST_CASE("diameter from matrix matches diameter from graph") {
  const Graph g = gen_gnp({150, 0.03, 3});
  const DiameterReport a = diameter(g);
  const DiameterReport b = diameter(apsp(g), connected_components(g));
  CHECK(a.connected == b.connected);
  CHECK(a.max_component_diameter == b.max_component_diameter);
  CHECK(a.component_diameters == b.component_diameters);
  CHECK(a.eccentricities == b.eccentricities);
}

TEST_CASE("delta-diameter bound check") {
  CHECK(check_delta_diameter_bound(2, 2));
  CHECK(check_delta_diameter_bound(2, 3));
  CHECK_FALSE(check_delta_diameter_bound(3, 3));
  CHECK_FALSE(check_delta_diameter_bound(4, 3));
  CHECK_THROWS_AS(check_delta_diameter_bound(0, -1), InputError);
}
