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

#ifndef HYPGRAPH_METRIC_HPP
#define HYPGRAPH_METRIC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypgraph/graph.hpp"

namespace hypgraph {

// All-pairs shortest-path distances in 8-bit cells; kInfiniteDistance
// marks unreachable pairs. 8-bit cells keep an n=20000 matrix near
// 400 MB; the graphs of interest all have tiny diameters, so 254 is
// ample and overflow is a hard error rather than saturation.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(Vertex n)
      : n_(n),
        cells_(static_cast<std::size_t>(n) * n, kInfiniteDistance) {}

  Vertex size() const { return n_; }
  std::uint8_t operator()(Vertex u, Vertex v) const {
    return cells_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const std::uint8_t> row(Vertex u) const {
    return {cells_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  std::uint8_t* mutable_row(Vertex u) {
    return cells_.data() + static_cast<std::size_t>(u) * n_;
  }

 private:
  Vertex n_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct ApspOptions {
  std::size_t max_matrix_bytes = std::size_t{1} << 30;
};

// Row v equals bfs_distances(g, v); rows are computed independently and
// in parallel, then the matrix is frozen and shared read-only.
DistanceMatrix apsp(const Graph& g, const ApspOptions& opts = {});

struct DiameterReport {
  bool connected = true;
  // Empty iff the graph is disconnected (the cross-component diameter is
  // infinite); per-component values below are always finite.
  std::optional<int> diameter;
  int max_component_diameter = 0;
  std::vector<int> component_diameters;  // indexed by component label
  std::vector<int> eccentricities;       // per vertex, max finite distance
};

DiameterReport diameter(const Graph& g);
DiameterReport diameter(const DistanceMatrix& d,
                        const std::vector<Vertex>& component_labels);

// True iff a doubled hyperbolicity value is compatible with diameter D:
// 2*delta <= D for even D, and 2*delta <= D-1 for odd D.
bool check_delta_diameter_bound(int delta_doubled, int diameter);

}  // namespace hypgraph

#endif  // HYPGRAPH_METRIC_HPP
