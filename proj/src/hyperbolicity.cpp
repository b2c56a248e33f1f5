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

#include "hypgraph/hyperbolicity.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <vector>

#include "hypgraph/rng.hpp"

namespace hypgraph {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

inline int hi_minus_mid(int s1, int s2, int s3) {
  int hi = s1, mid = s2;
  if (mid > hi) std::swap(hi, mid);
  if (s3 > hi) {
    mid = hi;
    hi = s3;
  } else if (s3 > mid) {
    mid = s3;
  }
  return hi - mid;
}

inline std::array<Vertex, 4> sorted_quad(Vertex a, Vertex b, Vertex c,
                                         Vertex d) {
  std::array<Vertex, 4> q{a, b, c, d};
  std::sort(q.begin(), q.end());
  return q;
}

// Running maximum of (delta, lexicographically smallest quadruple).
// Merging candidates is commutative, so reductions are order-free.
struct Candidate {
  int delta = -1;
  std::array<Vertex, 4> quad{};

  void offer(int d, const std::array<Vertex, 4>& q) {
    if (d > delta || (d == delta && q < quad)) {
      delta = d;
      quad = q;
    }
  }
  void merge(const Candidate& other) {
    if (other.delta >= 0) offer(other.delta, other.quad);
  }
};

// Smallest quadruple of vertices sharing a component, if any: for delta 0
// every quadruple is a maximizer, and this is the lexicographic minimum.
std::optional<std::array<Vertex, 4>> first_co_component_quad(
    const std::vector<Vertex>& labels) {
  Vertex ncomp = 0;
  for (const Vertex l : labels) ncomp = std::max(ncomp, l + 1);
  std::vector<std::array<Vertex, 4>> firsts(ncomp);
  std::vector<std::uint32_t> counts(ncomp, 0);
  std::optional<std::array<Vertex, 4>> best;
  for (Vertex v = 0; v < labels.size(); ++v) {
    const Vertex c = labels[v];
    if (counts[c] < 4) {
      firsts[c][counts[c]++] = v;
      if (counts[c] == 4 && (!best || firsts[c] < *best)) best = firsts[c];
    }
  }
  return best;
}

}  // namespace

std::string algorithm_name(HypAlgorithm a) {
  return a == HypAlgorithm::kNaive ? "naive" : "pruned";
}

QuadEvaluation eval_quadruple(const DistanceMatrix& d, Vertex u, Vertex v,
                              Vertex x, Vertex y) {
  const Vertex n = d.size();
  if (u >= n || v >= n || x >= n || y >= n)
    throw InputError("eval_quadruple: vertex out of range");
  if (u == v || u == x || u == y || v == x || v == y || x == y)
    throw InputError("eval_quadruple: vertices must be distinct");
  const int duv = d(u, v), dxy = d(x, y), dux = d(u, x), dvy = d(v, y),
            duy = d(u, y), dvx = d(v, x);
  for (const int dd : {duv, dxy, dux, dvy, duy, dvx})
    if (dd == kInfiniteDistance)
      throw CrossComponentError(
          "eval_quadruple: vertices span multiple components");
  QuadEvaluation ev;
  ev.vertices = {u, v, x, y};
  ev.sums = {duv + dxy, dux + dvy, duy + dvx};
  std::sort(ev.sums.begin(), ev.sums.end(), std::greater<int>());
  ev.delta_doubled = ev.sums[0] - ev.sums[1];
  return ev;
}

HypResult hyperbolicity_naive(const Graph& g, const HypOptions& opts) {
  return hyperbolicity_naive(g, apsp(g, opts.apsp), opts);
}

HypResult hyperbolicity_naive(const Graph& g, const DistanceMatrix& d,
                              const HypOptions& opts) {
  const auto t0 = Clock::now();
  const Vertex n = g.vertex_count();
  if (n > opts.naive_max_vertices)
    throw CapacityError("hyperbolicity_naive: " + std::to_string(n) +
                        " vertices exceed the cap of " +
                        std::to_string(opts.naive_max_vertices));
  const std::vector<Vertex> comp = connected_components(g);

  Candidate best;
  std::uint64_t evals = 0;
  for (Vertex a = 0; a + 3 < n; ++a) {
    const std::uint8_t* da = d.row(a).data();
    for (Vertex b = a + 1; b + 2 < n; ++b) {
      if (comp[b] != comp[a]) continue;
      const std::uint8_t* db = d.row(b).data();
      const int dab = da[b];
      for (Vertex c = b + 1; c + 1 < n; ++c) {
        if (comp[c] != comp[a]) continue;
        const std::uint8_t* dc = d.row(c).data();
        const int dac = da[c];
        const int dbc = db[c];
        for (Vertex e = c + 1; e < n; ++e) {
          if (comp[e] != comp[a]) continue;
          const int s1 = dab + dc[e];
          const int s2 = dac + db[e];
          const int s3 = da[e] + dbc;
          ++evals;
          const int delta = hi_minus_mid(s1, s2, s3);
          // Enumeration is lexicographic, so only strict improvements
          // (or the very first quadruple) can change the witness.
          if (delta > best.delta) best.offer(delta, {a, b, c, e});
        }
      }
    }
  }

  HypResult r;
  r.algorithm = HypAlgorithm::kNaive;
  r.pairs_scanned = evals;
  if (best.delta >= 0) {
    r.delta_doubled = best.delta;
    r.witness = best.quad;
  }
  r.runtime_ms = ms_since(t0);
  return r;
}

HypResult hyperbolicity_pruned(const Graph& g, const HypOptions& opts) {
  return hyperbolicity_pruned(g, apsp(g, opts.apsp), opts);
}

HypResult hyperbolicity_pruned(const Graph& g, const DistanceMatrix& d,
                               const HypOptions& /*opts*/) {
  const auto t0 = Clock::now();
  const Vertex n = g.vertex_count();
  if (n > 65536)
    throw CapacityError("hyperbolicity_pruned: pair entries are 16-bit; " +
                        std::to_string(n) + " vertices exceed 65536");
  const std::vector<Vertex> comp = connected_components(g);
  const DiameterReport diam = diameter(d, comp);

  // No quadruple can beat the per-component diameter bound.
  int cap = 0;
  for (const int dc : diam.component_diameters)
    cap = std::max(cap, dc % 2 == 0 ? dc : dc - 1);

  struct PairEntry {
    std::uint16_t a, b;
    std::uint8_t dist;
  };

  // All finite pairs, bucketed by distance descending; within a distance
  // the fill order (v-major) keeps pairs in ascending colex order.
  std::vector<std::uint32_t> bucket_count(256, 0);
  for (Vertex v = 0; v < n; ++v) {
    const std::uint8_t* row = d.row(v).data();
    for (Vertex u = 0; u < v; ++u)
      if (row[u] != kInfiniteDistance) ++bucket_count[row[u]];
  }
  std::vector<std::size_t> bucket_start(256, 0);
  std::size_t total_pairs = 0;
  for (int dist = 254; dist >= 1; --dist) {
    bucket_start[dist] = total_pairs;
    total_pairs += bucket_count[dist];
  }
  std::vector<PairEntry> pairs(total_pairs);
  {
    std::vector<std::size_t> cursor(bucket_start);
    for (Vertex v = 0; v < n; ++v) {
      const std::uint8_t* row = d.row(v).data();
      for (Vertex u = 0; u < v; ++u) {
        const std::uint8_t dist = row[u];
        if (dist != kInfiniteDistance)
          pairs[cursor[dist]++] = {static_cast<std::uint16_t>(u),
                                   static_cast<std::uint16_t>(v), dist};
      }
    }
  }

  Candidate best;
  std::uint64_t evals = 0;

  // Outer pairs are consumed in rounds of deterministic size; the best
  // value is re-read only at round boundaries, so the set of evaluated
  // quadruples (hence the witness) does not depend on the worker count.
  const std::size_t kFirstRound = 1024;
  std::size_t start = 0;
  std::size_t span = kFirstRound;
  while (start < total_pairs) {
    const int best_now = std::max(best.delta, 0);
    if (best_now >= cap) break;
    if (static_cast<int>(pairs[start].dist) <= best_now) break;
    const std::size_t end = std::min(total_pairs, start + span);
    span *= 2;

    const int nthreads = omp_get_max_threads();
    std::vector<Candidate> local(nthreads);
    std::vector<std::uint64_t> local_evals(nthreads, 0);
#pragma omp parallel
    {
      const int tid = omp_get_thread_num();
      Candidate mine;
      std::uint64_t my_evals = 0;
#pragma omp for schedule(dynamic, 8) nowait
      for (std::int64_t k = static_cast<std::int64_t>(start);
           k < static_cast<std::int64_t>(end); ++k) {
        const PairEntry outer = pairs[static_cast<std::size_t>(k)];
        if (static_cast<int>(outer.dist) <= best_now) continue;
        const std::uint8_t* da = d.row(outer.a).data();
        const std::uint8_t* db = d.row(outer.b).data();
        const int base = outer.dist;
        const PairEntry* inner = pairs.data();
        for (std::int64_t j = 0; j < k; ++j) {
          const PairEntry p = inner[j];
          if (p.a == outer.a || p.a == outer.b || p.b == outer.a ||
              p.b == outer.b)
            continue;
          const int dac = da[p.a];
          if (dac == kInfiniteDistance) continue;  // other component
          const int s1 = base + p.dist;
          const int s2 = dac + db[p.b];
          const int s3 = da[p.b] + db[p.a];
          ++my_evals;
          const int delta = hi_minus_mid(s1, s2, s3);
          if (delta >= mine.delta)
            mine.offer(delta, sorted_quad(outer.a, outer.b, p.a, p.b));
        }
      }
      local[tid] = mine;
      local_evals[tid] = my_evals;
    }
    for (int t = 0; t < nthreads; ++t) {
      best.merge(local[t]);
      evals += local_evals[t];
    }
    start = end;
  }

  HypResult r;
  r.algorithm = HypAlgorithm::kPruned;
  r.pairs_scanned = evals;
  r.delta_doubled = std::max(best.delta, 0);
  if (best.delta > 0) {
    r.witness = best.quad;
  } else {
    // Every quadruple attains 0; report the smallest one, as naive does.
    r.witness = first_co_component_quad(comp);
    r.delta_doubled = 0;
  }
  r.runtime_ms = ms_since(t0);
  return r;
}

LowerBoundCertificate certify_lower_bound(const DistanceMatrix& d, Vertex u,
                                          Vertex v, Vertex x, Vertex y) {
  const QuadEvaluation ev = eval_quadruple(d, u, v, x, y);
  LowerBoundCertificate cert;
  cert.delta_doubled = ev.delta_doubled;
  const int level = ev.sums[1];
  if (ev.sums[1] == ev.sums[2] && level >= 2 && level % 2 == 0 &&
      ev.sums[0] >= 2 * level) {
    cert.canonical = true;
    cert.level = level;
  }
  return cert;
}

namespace {

bool induces_c4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  const std::array<Vertex, 4> q{a, b, c, d};
  int edges = 0;
  std::array<int, 4> deg{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.has_edge(q[i], q[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  return edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 &&
         deg[3] == 2;
}

}  // namespace

std::optional<std::array<Vertex, 4>> find_induced_c4(const Graph& g,
                                                     std::uint64_t budget,
                                                     std::uint64_t seed) {
  const Vertex n = g.vertex_count();
  if (n < 4) return std::nullopt;
  SplitMix64 rng(seed);
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    const auto a = static_cast<Vertex>(rng.next_below(n));
    const auto b = static_cast<Vertex>(rng.next_below(n));
    const auto c = static_cast<Vertex>(rng.next_below(n));
    const auto e = static_cast<Vertex>(rng.next_below(n));
    if (a == b || a == c || a == e || b == c || b == e || c == e) continue;
    if (induces_c4(g, a, b, c, e)) return sorted_quad(a, b, c, e);
  }
  if (n <= 100) {
    for (Vertex a = 0; a + 3 < n; ++a)
      for (Vertex b = a + 1; b + 2 < n; ++b)
        for (Vertex c = b + 1; c + 1 < n; ++c)
          for (Vertex e = c + 1; e < n; ++e)
            if (induces_c4(g, a, b, c, e)) return std::array<Vertex, 4>{a, b, c, e};
  }
  return std::nullopt;
}

}  // namespace hypgraph
