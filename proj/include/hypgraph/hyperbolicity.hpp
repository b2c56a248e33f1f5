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

#ifndef HYPGRAPH_HYPERBOLICITY_HPP
#define HYPGRAPH_HYPERBOLICITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "hypgraph/graph.hpp"
#include "hypgraph/metric.hpp"

namespace hypgraph {

// The three pairing sums of a quadruple, sorted descending. The doubled
// four-point defect sums[0] - sums[1] is what hyperbolicity maximizes;
// keeping it doubled makes every value an exact integer (delta itself is
// a half-integer).
struct QuadEvaluation {
  std::array<Vertex, 4> vertices;  // as given by the caller
  std::array<int, 3> sums;         // descending
  int delta_doubled = 0;
};

// Evaluates one quadruple of distinct vertices against a distance matrix.
// A repeated vertex is an input error; any infinite pairwise distance is
// a cross-component error.
QuadEvaluation eval_quadruple(const DistanceMatrix& d, Vertex u, Vertex v,
                              Vertex x, Vertex y);

enum class HypAlgorithm { kNaive, kPruned };

std::string algorithm_name(HypAlgorithm a);

struct HypOptions {
  // Full C(n,4) enumeration is refused above this many vertices.
  Vertex naive_max_vertices = 500;
  // The pruned scan stores one entry per finite vertex pair with 16-bit
  // endpoints, so it is capped at 65536 vertices on top of the matrix cap.
  ApspOptions apsp;
  // Seed of the search in find_induced_c4.
  std::uint64_t c4_seed = 0;
};

struct HypResult {
  int delta_doubled = 0;  // 2 * delta_H
  // A quadruple attaining delta_doubled, sorted ascending; absent when no
  // within-component quadruple exists. For delta 0 this is the smallest
  // co-component quadruple, matching the naive scan.
  std::optional<std::array<Vertex, 4>> witness;
  HypAlgorithm algorithm = HypAlgorithm::kNaive;
  std::uint64_t pairs_scanned = 0;  // quadruple evaluations performed
  double runtime_ms = 0.0;
};

// Exact hyperbolicity by full enumeration of within-component quadruples,
// each evaluated through the sorted-sums formulation. Serial; this is the
// oracle the pruned scan is tested against. The witness is the
// lexicographically smallest maximizer.
HypResult hyperbolicity_naive(const Graph& g, const HypOptions& opts = {});
HypResult hyperbolicity_naive(const Graph& g, const DistanceMatrix& d,
                              const HypOptions& opts = {});

// Exact hyperbolicity by a pruned scan over vertex pairs sorted by
// distance descending: the outer loop walks pairs in that order, the
// inner loop pairs each with every earlier endpoint-disjoint pair, and
// the outer loop stops once the next pair's distance cannot beat the
// best value found. Two facts make this exact:
//
//  * for any quadruple, twice its defect is at most the smaller pair
//    distance of its maximal pairing (two triangle inequalities give
//    d2 + d3 >= 2 min(d(u,v), d(x,y))), so every maximizer is seen
//    before the stop triggers; and
//  * twice the hyperbolicity never exceeds the diameter (minus one when
//    the diameter is odd), per component, so the scan also stops as soon
//    as the best value reaches that cap.
//
// Pruning decisions are taken only at deterministic round boundaries, so
// delta and witness are identical for every worker count. The witness is
// a maximizer but not always the globally smallest one.
HypResult hyperbolicity_pruned(const Graph& g, const HypOptions& opts = {});
HypResult hyperbolicity_pruned(const Graph& g, const DistanceMatrix& d,
                               const HypOptions& opts = {});

// Lower-bound certificate extracted from one quadruple: its defect, plus
// whether it realizes the canonical geometry in which the two smaller
// pairing sums agree on an even level i and the largest sum reaches 2i
// (which certifies delta_H >= i/2).
struct LowerBoundCertificate {
  int delta_doubled = 0;
  bool canonical = false;
  int level = 0;  // the common smaller sum when canonical, else 0
};

LowerBoundCertificate certify_lower_bound(const DistanceMatrix& d, Vertex u,
                                          Vertex v, Vertex x, Vertex y);

// Searches for four vertices inducing a 4-cycle (four edges, no
// diagonals): `budget` seeded random quadruples, then a full scan when
// n <= 100. Any hit certifies delta_H >= 1. Returns the sorted quadruple.
std::optional<std::array<Vertex, 4>> find_induced_c4(const Graph& g,
                                                     std::uint64_t budget,
                                                     std::uint64_t seed = 0);

}  // namespace hypgraph

#endif  // HYPGRAPH_HYPERBOLICITY_HPP
