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

#ifndef HYPGRAPH_GRAPH_HPP
#define HYPGRAPH_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "hypgraph/errors.hpp"

namespace hypgraph {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  bool operator==(const Edge&) const = default;
};

// G(n,p) generation request. Identical specs yield bit-identical graphs
// regardless of platform or thread count.
struct GenSpec {
  Vertex n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// Unreachable marker in 8-bit distance cells. Never enters arithmetic.
inline constexpr std::uint8_t kInfiniteDistance = 255;

// Immutable simple undirected graph.
//
// Two storage layouts sit behind one interface: bit-packed adjacency rows
// (one n-bit row per vertex) up to kDenseVertexLimit, and sorted CSR
// adjacency above it, where the bit matrix would not fit in memory. The
// word-parallel BFS runs on the bit rows; all other operations work on
// either layout.
class Graph {
 public:
  enum class Storage { kAuto, kDenseBits, kSparseCsr };

  // 65536 vertices keep the bit matrix at 512 MiB.
  static constexpr Vertex kDenseVertexLimit = 65536;

  Graph() = default;

  // Edges may arrive in any order with endpoints either way around.
  // Self-loops, duplicates, and out-of-range endpoints are input errors.
  static Graph from_edges(Vertex n, const std::vector<Edge>& edges,
                          Storage storage = Storage::kAuto);

  Vertex vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }
  bool is_dense() const { return dense_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::uint32_t degree(Vertex u) const;

  // Dense layout: the bit row of u (row_stride() words, tail bits zero).
  std::span<const std::uint64_t> row_words(Vertex u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * stride_, stride_};
  }
  std::size_t row_stride() const { return stride_; }

  // Sparse layout: sorted neighbor list of u.
  std::span<const Vertex> neighbors(Vertex u) const {
    return {adj_.data() + offsets_[u],
            adj_.data() + offsets_[static_cast<std::size_t>(u) + 1]};
  }

  // Visits the neighbors of u in ascending vertex order on either layout.
  template <typename F>
  void for_each_neighbor(Vertex u, F&& f) const {
    if (dense_) {
      const auto row = row_words(u);
      for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t bits = row[w];
        while (bits != 0) {
          const int b = std::countr_zero(bits);
          f(static_cast<Vertex>(w * 64 + static_cast<unsigned>(b)));
          bits &= bits - 1;
        }
      }
    } else {
      for (const Vertex v : neighbors(u)) f(v);
    }
  }

 private:
  friend Graph gen_gnp(const GenSpec&, Graph::Storage);
  friend Graph complement(const Graph&);

  static bool pick_dense(Vertex n, Storage storage);

  void init_dense(Vertex n);
  void init_sparse(Vertex n, std::vector<Edge> edges);
  void set_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * stride_ + v / 64] |=
        std::uint64_t{1} << (v % 64);
  }
  void clear_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * stride_ + v / 64] &=
        ~(std::uint64_t{1} << (v % 64));
  }
  bool test_bit(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * stride_ + v / 64] >>
            (v % 64)) & 1u;
  }

  Vertex n_ = 0;
  std::uint64_t m_ = 0;
  bool dense_ = true;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;    // dense layout
  std::vector<Vertex> adj_;            // sparse layout
  std::vector<std::uint64_t> offsets_; // sparse layout, n_+1 entries
};

// Samples G(n,p). Each of the C(n,2) vertex pairs becomes an edge
// independently with probability p, drawn by geometric skipping over the
// colexicographic pair index (pairs (u,v), u < v, ordered by (v,u)).
// For p > 1/2 the complement is sampled with probability 1-p by the same
// routine and inverted, so gen_gnp(n,p,seed) is by construction the exact
// complement of gen_gnp(n,1-p,seed) whenever the two calls take different
// branches (i.e. p != 1/2).
Graph gen_gnp(const GenSpec& spec,
              Graph::Storage storage = Graph::Storage::kAuto);

// Single-source distances; kInfiniteDistance marks unreachable vertices.
// Finite distances beyond 254 raise a capacity error. Dense graphs use
// word-parallel frontier expansion over the bit rows.
std::vector<std::uint8_t> bfs_distances(const Graph& g, Vertex source);

// Component label per vertex. Labels are dense indices assigned in order
// of each component's smallest vertex.
std::vector<Vertex> connected_components(const Graph& g);

// Inverts the edge set off the diagonal. Requires n within the dense
// limit; complement(complement(g)) == g.
Graph complement(const Graph& g);

namespace detail {

// Reusable per-thread BFS state, so all-source sweeps do not reallocate.
struct BfsScratch {
  std::vector<std::uint64_t> visited;
  std::vector<std::uint64_t> frontier;
  std::vector<std::uint64_t> next;
  std::vector<Vertex> queue;
};

// Fills out[0..n) with distances from source. Shared by bfs_distances,
// APSP, and the diameter sweep.
void bfs_fill(const Graph& g, Vertex source, std::uint8_t* out,
              BfsScratch& scratch);

}  // namespace detail

}  // namespace hypgraph

#endif  // HYPGRAPH_GRAPH_HPP
