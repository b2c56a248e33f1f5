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

#ifndef HYPGRAPH_GRAPH_IO_HPP
#define HYPGRAPH_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "hypgraph/graph.hpp"

namespace hypgraph {

// Edge-list file format, bit-exact:
//   line 1: "hypgraph v1"
//   line 2: "<n> <m>"
//   then m lines "<u> <v>" with 0 <= u < v < n, in ascending
//   colexicographic order, single spaces, newline-terminated.
//
// load parses strictly and reports the offending line on failure;
// save(load(f)) reproduces f byte for byte.

Graph load_graph(std::istream& in,
                 Graph::Storage storage = Graph::Storage::kAuto);
Graph load_graph(const std::string& path,
                 Graph::Storage storage = Graph::Storage::kAuto);

void save_graph(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::string& path);

}  // namespace hypgraph

#endif  // HYPGRAPH_GRAPH_IO_HPP
