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

#include "lavc/graph.h"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace lavc {
namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::vector<char> membership(const Graph& g, const CoverSet& c) {
  if (!c.fits(g)) {
    throw std::out_of_range("cover " + to_string(c) +
                            " names a vertex outside the graph of " +
                            std::to_string(g.num_vertices()) + " vertices");
  }
  std::vector<char> in(g.num_vertices(), 0);
  for (const VertexId v : c) in[v] = 1;
  return in;
}

}  // namespace

Graph build_graph(std::size_t n, std::span<const VertexPair> pairs) {
  Graph g;
  g.num_vertices_ = n;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(pairs.size());
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") has an endpoint outside [0,"
          << n << ")";
      throw GraphError(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "self-loop (" << u << "," << v << ") is not allowed";
      throw GraphError(msg.str());
    }
    if (!seen.insert(pair_key(u, v)).second) continue;
    g.edges_.push_back({u, v});
    ++degree[u];
    ++degree[v];
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.incidences_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const Edge& edge = g.edges_[e];
    g.incidences_[cursor[edge.u]++] = {edge.v, e};
    g.incidences_[cursor[edge.v]++] = {edge.u, e};
  }
  return g;
}

std::vector<VertexId> Graph::non_isolated_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices_; ++v) {
    if (degree(v) > 0) out.push_back(v);
  }
  return out;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a >= num_vertices_ || b >= num_vertices_) return false;
  const auto adj = adjacency(a);
  return std::any_of(adj.begin(), adj.end(),
                     [b](const Incidence& inc) { return inc.neighbor == b; });
}

CoverSet::CoverSet(std::vector<VertexId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

CoverSet CoverSet::all_non_isolated(const Graph& g) {
  return CoverSet(g.non_isolated_vertices());
}

bool CoverSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void CoverSet::insert(VertexId v) {
  const auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

bool CoverSet::fits(const Graph& g) const {
  return members_.empty() || members_.back() < g.num_vertices();
}

bool is_vertex_cover(const Graph& g, const CoverSet& c) {
  const auto in = membership(g, c);
  for (const Edge& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

std::vector<EdgeId> uncovered_edges(const Graph& g, const CoverSet& c) {
  const auto in = membership(g, c);
  std::vector<EdgeId> out;
  const auto edges = g.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (!in[edges[e].u] && !in[edges[e].v]) out.push_back(e);
  }
  return out;
}

std::string to_string(const CoverSet& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c.members()[i]);
  }
  return out + "}";
}

}  // namespace lavc
