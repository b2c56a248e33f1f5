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

#ifndef HYPGRAPH_REFERENCE_HPP
#define HYPGRAPH_REFERENCE_HPP

#include <vector>

#include "hypgraph/graph.hpp"
#include "hypgraph/metric.hpp"

// Textbook serial implementations, kept as oracles for the word-parallel
// and OpenMP kernels. Tests compare against these; the benchmark tool
// reports the speedup over them. No bit tricks, no threads.
namespace hypgraph::reference {

// Plain queue BFS; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// One queue BFS per source, serially.
DistanceMatrix apsp(const Graph& g);

}  // namespace hypgraph::reference

#endif  // HYPGRAPH_REFERENCE_HPP
