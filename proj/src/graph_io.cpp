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

#include "hypgraph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace hypgraph {

namespace {

constexpr const char* kMagic = "hypgraph v1";

// Parses "<a> <b>" with exactly one space and no other characters.
bool parse_uint_pair(const std::string& line, std::uint64_t& a,
                     std::uint64_t& b) {
  const char* begin = line.data();
  const char* end = begin + line.size();
  auto r1 = std::from_chars(begin, end, a);
  if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ' ') return false;
  auto r2 = std::from_chars(r1.ptr + 1, end, b);
  return r2.ec == std::errc{} && r2.ptr == end;
}

std::uint64_t colex_index(std::uint64_t u, std::uint64_t v) {
  return v * (v - 1) / 2 + u;
}

}  // namespace

Graph load_graph(std::istream& in, Graph::Storage storage) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line) || line != kMagic)
    throw ParseError("expected header \"" + std::string(kMagic) + "\"",
                     lineno);

  ++lineno;
  std::uint64_t n = 0, m = 0;
  if (!std::getline(in, line) || !parse_uint_pair(line, n, m))
    throw ParseError("expected \"<n> <m>\"", lineno);
  if (n == 0 && m > 0) throw ParseError("edges listed for empty graph", lineno);
  if (n > ~Vertex{0}) throw ParseError("vertex count out of range", lineno);

  std::vector<Edge> edges;
  edges.reserve(m);
  std::uint64_t prev_index = 0;
  bool have_prev = false;
  for (std::uint64_t i = 0; i < m; ++i) {
    ++lineno;
    std::uint64_t u = 0, v = 0;
    if (!std::getline(in, line))
      throw ParseError("edge count mismatch: expected " + std::to_string(m) +
                           " edges, file ends after " + std::to_string(i),
                       lineno);
    if (!parse_uint_pair(line, u, v))
      throw ParseError("expected \"<u> <v>\"", lineno);
    if (u >= v) throw ParseError("edge endpoints must satisfy u < v", lineno);
    if (v >= n) throw ParseError("vertex out of range", lineno);
    const std::uint64_t idx = colex_index(u, v);
    if (have_prev && idx <= prev_index)
      throw ParseError("edges not in ascending colexicographic order", lineno);
    prev_index = idx;
    have_prev = true;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (std::getline(in, line))
    throw ParseError("trailing content after " + std::to_string(m) + " edges",
                     lineno + 1);
  return Graph::from_edges(static_cast<Vertex>(n), edges, storage);
}

Graph load_graph(const std::string& path, Graph::Storage storage) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return load_graph(in, storage);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << kMagic << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  // v-major emission over u < v is exactly ascending colexicographic order.
  std::uint64_t written = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    g.for_each_neighbor(v, [&](Vertex u) {
      if (u < v) {
        out << u << ' ' << v << '\n';
        ++written;
      }
    });
  }
  if (written != g.edge_count())
    throw InternalError("save_graph: adjacency inconsistent with edge count");
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  save_graph(g, out);
  out.flush();
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace hypgraph
