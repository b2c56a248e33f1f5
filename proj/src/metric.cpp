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

#include "hypgraph/metric.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <string>

namespace hypgraph {

namespace {

// Runs fn(source, row, scratch) for every source on a worker team and
// rethrows the first exception (by source index) after the sweep.
template <typename RowFn>
void all_source_bfs(const Graph& g, RowFn&& fn) {
  const Vertex n = g.vertex_count();
  std::exception_ptr error;
  Vertex error_source = n;
  std::mutex error_mutex;
#pragma omp parallel
  {
    detail::BfsScratch scratch;
    std::vector<std::uint8_t> row(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
      try {
        fn(static_cast<Vertex>(v), row.data(), scratch);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (static_cast<Vertex>(v) < error_source) {
          error_source = static_cast<Vertex>(v);
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

DistanceMatrix apsp(const Graph& g, const ApspOptions& opts) {
  const Vertex n = g.vertex_count();
  const std::size_t bytes = static_cast<std::size_t>(n) * n;
  if (bytes > opts.max_matrix_bytes)
    throw CapacityError("apsp: matrix of " + std::to_string(bytes) +
                        " bytes exceeds the configured cap of " +
                        std::to_string(opts.max_matrix_bytes));
  DistanceMatrix d(n);
  all_source_bfs(g, [&](Vertex v, std::uint8_t* /*row*/,
                        detail::BfsScratch& scratch) {
    detail::bfs_fill(g, v, d.mutable_row(v), scratch);
  });
  return d;
}

namespace {

DiameterReport report_from_eccentricities(std::vector<int> ecc,
                                          const std::vector<Vertex>& labels) {
  DiameterReport rep;
  Vertex ncomp = 0;
  for (const Vertex l : labels) ncomp = std::max(ncomp, l + 1);
  rep.component_diameters.assign(ncomp, 0);
  for (std::size_t v = 0; v < labels.size(); ++v)
    rep.component_diameters[labels[v]] =
        std::max(rep.component_diameters[labels[v]], ecc[v]);
  rep.max_component_diameter = 0;
  for (const int d : rep.component_diameters)
    rep.max_component_diameter = std::max(rep.max_component_diameter, d);
  rep.connected = ncomp <= 1;
  if (rep.connected) rep.diameter = rep.max_component_diameter;
  rep.eccentricities = std::move(ecc);
  return rep;
}

}  // namespace

DiameterReport diameter(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<int> ecc(n, 0);
  all_source_bfs(g, [&](Vertex v, std::uint8_t* row,
                        detail::BfsScratch& scratch) {
    detail::bfs_fill(g, v, row, scratch);
    int e = 0;
    for (Vertex u = 0; u < n; ++u)
      if (row[u] != kInfiniteDistance) e = std::max(e, static_cast<int>(row[u]));
    ecc[v] = e;
  });
  return report_from_eccentricities(std::move(ecc), connected_components(g));
}

DiameterReport diameter(const DistanceMatrix& d,
                        const std::vector<Vertex>& component_labels) {
  const Vertex n = d.size();
  std::vector<int> ecc(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto row = d.row(v);
    int e = 0;
    for (Vertex u = 0; u < n; ++u)
      if (row[u] != kInfiniteDistance) e = std::max(e, static_cast<int>(row[u]));
    ecc[v] = e;
  }
  return report_from_eccentricities(std::move(ecc), component_labels);
}

bool check_delta_diameter_bound(int delta_doubled, int diameter) {
  if (diameter < 0)
    throw InputError("check_delta_diameter_bound: negative diameter");
  return diameter % 2 == 0 ? delta_doubled <= diameter
                           : delta_doubled <= diameter - 1;
}

}  // namespace hypgraph
