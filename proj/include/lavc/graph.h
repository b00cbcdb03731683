// Copyright 2026 The lavc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAVC_GRAPH_H_
#define LAVC_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lavc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using VertexPair = std::pair<VertexId, VertexId>;

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Raised for structurally invalid input: self-loops, endpoints out of range.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable undirected simple graph with dense 0-based vertex ids.
//
// Edge ids follow first-seen order of the input pairs. Each edge appears in
// the adjacency of both endpoints under the same id, so `adjacency(v)[i]`
// doubles as the i-th action of the automaton sitting on v.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Incidence> adjacency(VertexId v) const {
    return {incidences_.data() + offsets_.at(v),
            incidences_.data() + offsets_.at(v + 1)};
  }
  std::size_t degree(VertexId v) const {
    return offsets_.at(v + 1) - offsets_.at(v);
  }
  bool is_isolated(VertexId v) const { return degree(v) == 0; }

  // Vertices of degree >= 1, ascending.
  std::vector<VertexId> non_isolated_vertices() const;

  bool has_edge(VertexId a, VertexId b) const;

 private:
  friend Graph build_graph(std::size_t n, std::span<const VertexPair> pairs);

  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  // CSR layout: incidences of v live in [offsets_[v], offsets_[v+1]).
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

// Builds a graph on n vertices. Pairs repeated in either orientation
// collapse to the first occurrence. Throws GraphError on a self-loop or on
// an endpoint outside [0, n).
Graph build_graph(std::size_t n, std::span<const VertexPair> pairs);
inline Graph build_graph(std::size_t n,
                         std::initializer_list<VertexPair> pairs) {
  return build_graph(n, std::span<const VertexPair>(pairs.begin(), pairs.size()));
}

// A set of vertex ids, kept sorted and free of duplicates.
class CoverSet {
 public:
  CoverSet() = default;
  explicit CoverSet(std::vector<VertexId> members);
  CoverSet(std::initializer_list<VertexId> members)
      : CoverSet(std::vector<VertexId>(members)) {}

  // Every vertex with at least one incident edge.
  static CoverSet all_non_isolated(const Graph& g);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;
  void insert(VertexId v);

  std::span<const VertexId> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // True iff every member is a vertex of g.
  bool fits(const Graph& g) const;

  bool operator==(const CoverSet&) const = default;

 private:
  std::vector<VertexId> members_;
};

// Both predicates throw std::out_of_range when c names a vertex outside g.
bool is_vertex_cover(const Graph& g, const CoverSet& c);
// Edges with neither endpoint in c, ascending by id.
std::vector<EdgeId> uncovered_edges(const Graph& g, const CoverSet& c);

std::string to_string(const CoverSet& c);

}  // namespace lavc

#endif  // LAVC_GRAPH_H_
