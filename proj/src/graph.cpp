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

#include "hypgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypgraph/rng.hpp"

namespace hypgraph {

namespace {

std::uint64_t pair_count(Vertex n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

std::uint64_t tri(std::uint64_t v) { return v * (v - 1) / 2; }

// Inverts the colexicographic linearization k = v(v-1)/2 + u, u < v.
Edge decode_pair(std::uint64_t k) {
  auto v = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  if (v < 1) v = 1;
  while (tri(v) > k) --v;
  while (tri(v + 1) <= k) ++v;
  return {static_cast<Vertex>(k - tri(v)), static_cast<Vertex>(v)};
}

// Calls emit(k) for every pair index in [0, total) kept with probability
// prob, via geometric skipping. prob must be in [0, 1/2].
template <typename EmitFn>
void sample_pair_indices(std::uint64_t total, double prob, SplitMix64& rng,
                         EmitFn&& emit) {
  if (prob <= 0.0 || total == 0) return;
  const double log_keep = std::log1p(-prob);  // < 0 since prob <= 1/2
  std::uint64_t cursor = 0;
  for (;;) {
    const double u = rng.next_unit();
    const double jump = std::floor(std::log1p(-u) / log_keep);
    if (jump >= static_cast<double>(total - cursor)) break;
    cursor += static_cast<std::uint64_t>(jump);
    emit(cursor);
    if (++cursor >= total) break;
  }
}

void validate_spec(const GenSpec& spec) {
  if (spec.n == 0) throw InputError("gen_gnp: vertex count must be positive");
  if (!(spec.p >= 0.0 && spec.p <= 1.0))
    throw InputError("gen_gnp: edge probability must lie in [0,1]");
}

}  // namespace

bool Graph::pick_dense(Vertex n, Storage storage) {
  switch (storage) {
    case Storage::kDenseBits:
      return true;
    case Storage::kSparseCsr:
      return false;
    case Storage::kAuto:
    default:
      return n <= kDenseVertexLimit;
  }
}

void Graph::init_dense(Vertex n) {
  n_ = n;
  dense_ = true;
  stride_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * stride_, 0);
}

void Graph::init_sparse(Vertex n, std::vector<Edge> edges) {
  n_ = n;
  dense_ = false;
  m_ = edges.size();
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i)
    offsets_[i] += offsets_[i - 1];
  adj_.resize(2 * edges.size());
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    adj_[cursor[e.u]++] = e.v;
    adj_[cursor[e.v]++] = e.u;
  }
  for (Vertex u = 0; u < n; ++u) {
    const auto begin = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
    const auto end = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
    std::sort(begin, end);
    if (std::adjacent_find(begin, end) != end)
      throw InputError("duplicate edge at vertex " + std::to_string(u));
  }
}

Graph Graph::from_edges(Vertex n, const std::vector<Edge>& edges,
                        Storage storage) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + ")");
    if (e.u == e.v)
      throw InputError("self-loop at vertex " + std::to_string(e.u));
  }
  Graph g;
  if (pick_dense(n, storage)) {
    g.init_dense(n);
    for (const Edge& e : edges) {
      if (g.test_bit(e.u, e.v))
        throw InputError("duplicate edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ")");
      g.set_bit(e.u, e.v);
      g.set_bit(e.v, e.u);
    }
    g.m_ = edges.size();
  } else {
    g.init_sparse(n, edges);
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (dense_) return test_bit(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint32_t Graph::degree(Vertex u) const {
  if (!dense_)
    return static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]);
  std::uint32_t deg = 0;
  for (const std::uint64_t w : row_words(u))
    deg += static_cast<std::uint32_t>(std::popcount(w));
  return deg;
}

Graph gen_gnp(const GenSpec& spec, Graph::Storage storage) {
  validate_spec(spec);
  const Vertex n = spec.n;
  const std::uint64_t total = pair_count(n);
  const bool dense = Graph::pick_dense(n, storage);
  SplitMix64 rng(spec.seed);

  Graph g;
  if (spec.p <= 0.5) {
    if (dense) {
      g.init_dense(n);
      sample_pair_indices(total, spec.p, rng, [&](std::uint64_t k) {
        const Edge e = decode_pair(k);
        g.set_bit(e.u, e.v);
        g.set_bit(e.v, e.u);
        ++g.m_;
      });
    } else {
      std::vector<Edge> edges;
      edges.reserve(static_cast<std::size_t>(
          static_cast<double>(total) * spec.p * 1.1 + 64.0));
      sample_pair_indices(total, spec.p, rng, [&](std::uint64_t k) {
        edges.push_back(decode_pair(k));
      });
      g = Graph::from_edges(n, edges, Graph::Storage::kSparseCsr);
    }
    return g;
  }

  // p > 1/2: draw the complement with probability 1-p, then invert.
  if (!dense)
    throw CapacityError(
        "gen_gnp: p > 1/2 needs the dense layout; n exceeds the dense limit");
  g.init_dense(n);
  for (std::uint64_t w = 0; w < g.bits_.size(); ++w) g.bits_[w] = ~0ULL;
  // Clear the diagonal and the tail bits past n in each row.
  const unsigned tail = n % 64;
  for (Vertex u = 0; u < n; ++u) {
    g.clear_bit(u, u);
    if (tail != 0)
      g.bits_[static_cast<std::size_t>(u) * g.stride_ + g.stride_ - 1] &=
          (~0ULL >> (64 - tail));
  }
  g.m_ = total;
  sample_pair_indices(total, 1.0 - spec.p, rng, [&](std::uint64_t k) {
    const Edge e = decode_pair(k);
    g.clear_bit(e.u, e.v);
    g.clear_bit(e.v, e.u);
    --g.m_;
  });
  return g;
}

namespace detail {

namespace {

void bfs_fill_dense(const Graph& g, Vertex source, std::uint8_t* out,
                    BfsScratch& s) {
  const Vertex n = g.vertex_count();
  const std::size_t words = g.row_stride();
  s.visited.assign(words, 0);
  s.frontier.assign(words, 0);
  s.next.assign(words, 0);
  std::fill(out, out + n, kInfiniteDistance);
  out[source] = 0;
  s.visited[source / 64] |= std::uint64_t{1} << (source % 64);
  s.frontier[source / 64] |= std::uint64_t{1} << (source % 64);

  int level = 0;
  for (;;) {
    std::fill(s.next.begin(), s.next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = s.frontier[w];
      while (bits != 0) {
        const Vertex u = static_cast<Vertex>(
            w * 64 + static_cast<unsigned>(std::countr_zero(bits)));
        const auto row = g.row_words(u);
        for (std::size_t i = 0; i < words; ++i) s.next[i] |= row[i];
        bits &= bits - 1;
      }
    }
    ++level;
    std::uint64_t found = 0;
    for (std::size_t w = 0; w < words; ++w) {
      s.next[w] &= ~s.visited[w];
      found |= s.next[w];
    }
    if (found == 0) break;
    if (level > 254) {
      for (std::size_t w = 0; w < words; ++w) {
        if (s.next[w] != 0) {
          const Vertex v = static_cast<Vertex>(
              w * 64 + static_cast<unsigned>(std::countr_zero(s.next[w])));
          throw CapacityError("distance overflow past 254 between " +
                              std::to_string(source) + " and " +
                              std::to_string(v));
        }
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      s.visited[w] |= s.next[w];
      std::uint64_t bits = s.next[w];
      while (bits != 0) {
        const Vertex v = static_cast<Vertex>(
            w * 64 + static_cast<unsigned>(std::countr_zero(bits)));
        out[v] = static_cast<std::uint8_t>(level);
        bits &= bits - 1;
      }
    }
    s.frontier.swap(s.next);
  }
}

void bfs_fill_sparse(const Graph& g, Vertex source, std::uint8_t* out,
                     BfsScratch& s) {
  const Vertex n = g.vertex_count();
  std::fill(out, out + n, kInfiniteDistance);
  s.queue.clear();
  s.queue.push_back(source);
  out[source] = 0;
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const Vertex u = s.queue[head];
    const int du = out[u];
    for (const Vertex v : g.neighbors(u)) {
      if (out[v] != kInfiniteDistance) continue;
      if (du >= 254)
        throw CapacityError("distance overflow past 254 between " +
                            std::to_string(source) + " and " +
                            std::to_string(v));
      out[v] = static_cast<std::uint8_t>(du + 1);
      s.queue.push_back(v);
    }
  }
}

}  // namespace

void bfs_fill(const Graph& g, Vertex source, std::uint8_t* out,
              BfsScratch& scratch) {
  if (g.is_dense())
    bfs_fill_dense(g, source, out, scratch);
  else
    bfs_fill_sparse(g, source, out, scratch);
}

}  // namespace detail

std::vector<std::uint8_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.vertex_count())
    throw InputError("bfs_distances: source out of range");
  std::vector<std::uint8_t> dist(g.vertex_count());
  detail::BfsScratch scratch;
  detail::bfs_fill(g, source, dist.data(), scratch);
  return dist;
}

std::vector<Vertex> connected_components(const Graph& g) {
  const Vertex n = g.vertex_count();
  constexpr Vertex kUnlabeled = ~Vertex{0};
  std::vector<Vertex> label(n, kUnlabeled);
  std::vector<Vertex> queue;
  Vertex next_label = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] != kUnlabeled) continue;
    const Vertex id = next_label++;
    label[root] = id;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      g.for_each_neighbor(queue[head], [&](Vertex v) {
        if (label[v] == kUnlabeled) {
          label[v] = id;
          queue.push_back(v);
        }
      });
    }
  }
  return label;
}

Graph complement(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n > Graph::kDenseVertexLimit)
    throw CapacityError("complement: graph exceeds the dense vertex limit");
  Graph c;
  c.init_dense(n);
  if (g.is_dense()) {
    for (std::size_t w = 0; w < c.bits_.size(); ++w) c.bits_[w] = ~g.bits_[w];
  } else {
    for (std::size_t w = 0; w < c.bits_.size(); ++w) c.bits_[w] = ~0ULL;
    for (Vertex u = 0; u < n; ++u)
      for (const Vertex v : g.neighbors(u)) c.clear_bit(u, v);
  }
  const unsigned tail = n % 64;
  for (Vertex u = 0; u < n; ++u) {
    c.clear_bit(u, u);
    if (tail != 0)
      c.bits_[static_cast<std::size_t>(u) * c.stride_ + c.stride_ - 1] &=
          (~0ULL >> (64 - tail));
  }
  c.m_ = pair_count(n) - g.edge_count();
  return c;
}

}  // namespace hypgraph
