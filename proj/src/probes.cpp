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

#include "hypgraph/probes.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>

#include "hypgraph/rng.hpp"

namespace hypgraph {

ProbeReport probe_vertex(const Graph& g, Vertex v, int radius,
                         const std::vector<Vertex>& forbidden) {
  const Vertex n = g.vertex_count();
  if (v >= n) throw InputError("probe_vertex: vertex out of range");
  if (radius < 1 || radius > 254)
    throw InputError("probe_vertex: radius must lie in [1, 254]");
  for (const Vertex f : forbidden) {
    if (f >= n) throw InputError("probe_vertex: forbidden vertex out of range");
    if (f == v) throw InputError("probe_vertex: probed vertex is forbidden");
  }

  std::vector<std::uint8_t> blocked(n, 0);
  for (const Vertex f : forbidden) blocked[f] = 1;

  constexpr std::uint8_t kUnseen = 255;
  std::vector<std::uint8_t> depth(n, kUnseen);
  std::vector<Vertex> parent(n, n);
  enum : std::uint8_t { kNone = 0, kLeft = 1, kRight = 2 };
  std::vector<std::uint8_t> side(n, kNone);

  // Truncated BFS; ascending neighbor order makes the first-found parent
  // (and thus the left/right split below) deterministic.
  std::vector<Vertex> order;
  order.push_back(v);
  depth[v] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    const int du = depth[u];
    if (du >= radius) break;  // BFS order: all deeper vertices follow
    g.for_each_neighbor(u, [&](Vertex w) {
      if (blocked[w] || depth[w] != kUnseen) return;
      depth[w] = static_cast<std::uint8_t>(du + 1);
      parent[w] = u;
      order.push_back(w);
    });
  }

  // Split N(v,1) into halves by ascending id; BFS-tree ancestry colors
  // the deeper spheres.
  {
    std::vector<Vertex> first_sphere;
    for (const Vertex u : order)
      if (depth[u] == 1) first_sphere.push_back(u);
    std::sort(first_sphere.begin(), first_sphere.end());
    const std::size_t half = (first_sphere.size() + 1) / 2;
    for (std::size_t idx = 0; idx < first_sphere.size(); ++idx)
      side[first_sphere[idx]] = idx < half ? kLeft : kRight;
    for (const Vertex u : order)  // nondecreasing depth
      if (depth[u] >= 2) side[u] = side[parent[u]];
  }

  ProbeReport rep;
  rep.vertex = v;
  rep.radius = radius;
  rep.sphere_sizes.assign(radius + 1, 0);
  for (const Vertex u : order) ++rep.sphere_sizes[depth[u]];

  rep.ball_sizes.assign(radius + 1, 0);
  std::uint64_t running = 0;
  for (int j = 0; j <= radius; ++j) {
    running += rep.sphere_sizes[j];
    rep.ball_sizes[j] = running;
  }

  // Edge censuses over the ball: an edge {u,w} belongs to every ball of
  // radius >= max(depth u, depth w); parent multiplicity falls out of the
  // same neighbor scan.
  std::vector<std::uint64_t> edges_at(radius + 1, 0);
  std::vector<std::uint8_t> parent_ok_at(radius + 1, 1);
  for (const Vertex u : order) {
    const int du = depth[u];
    int parents = 0;
    g.for_each_neighbor(u, [&](Vertex w) {
      if (blocked[w] || depth[w] == kUnseen) return;
      if (u < w) ++edges_at[std::max<int>(du, depth[w])];
      if (du >= 1 && depth[w] == du - 1) ++parents;
    });
    if (du >= 1 && parents != 1) parent_ok_at[du] = 0;
  }

  rep.is_tree_ball.assign(radius + 1, 0);
  rep.unique_parent_ok.assign(radius + 1, 1);
  std::uint64_t edge_running = 0;
  for (int j = 0; j <= radius; ++j) {
    edge_running += edges_at[j];
    rep.is_tree_ball[j] = edge_running == rep.ball_sizes[j] - 1;
    rep.unique_parent_ok[j] =
        (j == 0 ? 1 : rep.unique_parent_ok[j - 1]) && parent_ok_at[j];
  }

  for (const Vertex u : order)
    if (depth[u] == radius) {
      if (side[u] == kLeft)
        ++rep.left_size;
      else if (side[u] == kRight)
        ++rep.right_size;
    }
  return rep;
}

SurveyResult expansion_survey(const Graph& g, const SurveyConfig& cfg) {
  const Vertex n = g.vertex_count();
  if (n == 0) throw InputError("expansion_survey: empty graph");
  if (cfg.samples == 0) throw InputError("expansion_survey: samples must be positive");

  std::vector<std::uint8_t> blocked(n, 0);
  std::uint64_t eligible = n;
  for (const Vertex f : cfg.forbidden) {
    if (f >= n) throw InputError("expansion_survey: forbidden vertex out of range");
    if (!blocked[f]) {
      blocked[f] = 1;
      --eligible;
    }
  }
  if (cfg.samples > eligible)
    throw InputError("expansion_survey: more samples than eligible vertices");

  // Draw distinct sample vertices; order of draws fixes report order.
  std::vector<Vertex> sampled;
  sampled.reserve(cfg.samples);
  {
    SplitMix64 rng(cfg.seed);
    std::vector<std::uint8_t> chosen(n, 0);
    while (sampled.size() < cfg.samples) {
      const auto v = static_cast<Vertex>(rng.next_below(n));
      if (blocked[v] || chosen[v]) continue;
      chosen[v] = 1;
      sampled.push_back(v);
    }
  }

  SurveyResult res;
  res.mean_degree =
      2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
  res.reports.resize(cfg.samples);

  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(cfg.samples); ++s) {
    try {
      res.reports[static_cast<std::size_t>(s)] = probe_vertex(
          g, sampled[static_cast<std::size_t>(s)], cfg.radius, cfg.forbidden);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  // Aggregate serially in sample order.
  const double d = res.mean_degree;
  res.ratio_mean.assign(cfg.radius + 1, 0.0);
  res.ratio_sd.assign(cfg.radius + 1, 0.0);
  std::uint64_t trees = 0;
  for (int j = 1; j <= cfg.radius; ++j) {
    const double scale = std::pow(d, j);
    double sum = 0.0, sum_sq = 0.0;
    for (const ProbeReport& r : res.reports) {
      const double ratio =
          scale > 0.0 ? static_cast<double>(r.sphere_sizes[j]) / scale : 0.0;
      sum += ratio;
      sum_sq += ratio * ratio;
    }
    const auto k = static_cast<double>(cfg.samples);
    res.ratio_mean[j] = sum / k;
    res.ratio_sd[j] =
        k > 1.0 ? std::sqrt(std::max(0.0, (sum_sq - sum * sum / k) / (k - 1.0)))
                : 0.0;
  }
  for (const ProbeReport& r : res.reports)
    if (r.is_tree_ball[cfg.radius]) ++trees;
  res.tree_ball_fraction =
      static_cast<double>(trees) / static_cast<double>(cfg.samples);
  return res;
}

}  // namespace hypgraph
