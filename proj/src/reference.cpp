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

#include "hypgraph/reference.hpp"

#include <queue>
#include <string>

namespace hypgraph::reference {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.vertex_count())
    throw InputError("reference::bfs_distances: source out of range");
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    g.for_each_neighbor(u, [&](Vertex v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    });
  }
  return dist;
}

DistanceMatrix apsp(const Graph& g) {
  const Vertex n = g.vertex_count();
  DistanceMatrix d(n);
  for (Vertex v = 0; v < n; ++v) {
    const std::vector<int> row = reference::bfs_distances(g, v);
    std::uint8_t* out = d.mutable_row(v);
    for (Vertex u = 0; u < n; ++u) {
      if (row[u] < 0) {
        out[u] = kInfiniteDistance;
      } else {
        if (row[u] > 254)
          throw CapacityError("reference::apsp: distance overflow between " +
                              std::to_string(v) + " and " + std::to_string(u));
        out[u] = static_cast<std::uint8_t>(row[u]);
      }
    }
  }
  return d;
}

}  // namespace hypgraph::reference
