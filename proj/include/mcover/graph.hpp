// Copyright 2026 The mcover Authors.
//
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

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcover/errors.hpp"

namespace mcover {

using Vertex = std::uint32_t;

/// Undirected edge with endpoints stored in increasing order.
class Edge {
 public:
  /// Throws PreconditionError for a loop.
  constexpr Edge(Vertex a, Vertex b) : u_(a < b ? a : b), v_(a < b ? b : a) {
    if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
  }

  constexpr Vertex u() const noexcept { return u_; }
  constexpr Vertex v() const noexcept { return v_; }
  constexpr bool touches(Vertex w) const noexcept { return u_ == w || v_ == w; }
  constexpr bool shares_vertex(const Edge& o) const noexcept {
    return touches(o.u_) || touches(o.v_);
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

  std::string to_string() const {
    return "(" + std::to_string(u_) + "," + std::to_string(v_) + ")";
  }

 private:
  Vertex u_;
  Vertex v_;
};

/// Shortest-path length, or std::nullopt when the target is unreachable.
using Distance = std::optional<std::size_t>;

/// Simple undirected graph on vertices 0..n-1. Immutable; the edge list is
/// kept strictly sorted so equal graphs compare equal memberwise.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on an out-of-range endpoint or a duplicate edge.
  Graph(std::size_t order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.v() >= order_) {
        throw PreconditionError("edge " + e.to_string() + " has an endpoint outside 0.." +
                                std::to_string(order_ == 0 ? 0 : order_ - 1));
      }
      if (i > 0 && edges_[i - 1] == e) {
        throw PreconditionError("duplicate edge " + e.to_string());
      }
    }
    adjacency_.assign(order_, {});
    for (const Edge& e : edges_) {
      adjacency_[e.u()].push_back(e.v());
      adjacency_[e.v()].push_back(e.u());
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    fingerprint_ = compute_fingerprint();
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Sorted neighbours of `w`.
  std::span<const Vertex> neighbors(Vertex w) const {
    check_vertex(w);
    return adjacency_[w];
  }
  std::size_t degree(Vertex w) const { return neighbors(w).size(); }

  bool has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }
  bool has_vertex(Vertex w) const noexcept { return w < order_; }

  void check_vertex(Vertex w) const {
    if (w >= order_) {
      throw PreconditionError("vertex " + std::to_string(w) + " out of range for a graph of order " +
                              std::to_string(order_));
    }
  }
  void check_edge(const Edge& e) const {
    if (!has_edge(e)) throw PreconditionError("edge " + e.to_string() + " is not in the graph");
  }

  /// FNV-1a over the canonical form; used to bind matchings to their graph.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::uint64_t compute_fingerprint() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
      for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xffU;
        h *= 0x100000001b3ULL;
      }
    };
    mix(order_);
    for (const Edge& e : edges_) {
      mix(e.u());
      mix(e.v());
    }
    return h;
  }

  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::uint64_t fingerprint_ = 0xcbf29ce484222325ULL;
};

/// Edges incident with `w` (the set N_G(w) of edges), sorted.
inline std::vector<Edge> incident_edges(const Graph& g, Vertex w) {
  std::vector<Edge> out;
  for (Vertex x : g.neighbors(w)) out.emplace_back(w, x);
  std::sort(out.begin(), out.end());
  return out;
}

/// Same vertex set, `e` removed. Throws if `e` is not an edge of `g`.
inline Graph delete_edge(const Graph& g, const Edge& e) {
  g.check_edge(e);
  std::vector<Edge> rest;
  rest.reserve(g.size() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) rest.push_back(f);
  }
  return Graph(g.order(), std::move(rest));
}

/// Same vertex set, `e` added. Throws if `e` is already present.
inline Graph insert_edge(const Graph& g, const Edge& e) {
  std::vector<Edge> all = g.edges();
  all.push_back(e);
  return Graph(g.order(), std::move(all));
}

namespace detail {

// Keeps the vertices with keep[w] set, relabelled by increasing original index.
inline Graph induced_relabelled(const Graph& g, const std::vector<bool>& keep) {
  std::vector<Vertex> label(g.order(), 0);
  Vertex next = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (keep[w]) label[w] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.u()] && keep[e.v()]) edges.emplace_back(label[e.u()], label[e.v()]);
  }
  return Graph(next, std::move(edges));
}

}  // namespace detail

/// Removes the vertices in `removed` and their edges; survivors are relabelled
/// 0..n-|S|-1 by increasing original index.
inline Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> keep(g.order(), true);
  for (Vertex w : removed) {
    g.check_vertex(w);
    keep[w] = false;
  }
  return detail::induced_relabelled(g, keep);
}

inline Graph delete_vertices(const Graph& g, std::initializer_list<Vertex> removed) {
  return delete_vertices(g, std::span<const Vertex>(removed.begin(), removed.size()));
}

/// Degree-zero vertices of `g`, ascending.
inline std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (g.degree(w) == 0) out.push_back(w);
  }
  return out;
}

inline bool has_isolated_vertex(const Graph& g) {
  for (Vertex w = 0; w < g.order(); ++w) {
    if (g.degree(w) == 0) return true;
  }
  return false;
}

/// Removes all degree-zero vertices, relabelling as delete_vertices does.
inline Graph drop_isolated(const Graph& g) {
  const auto isolated = isolated_vertices(g);
  return delete_vertices(g, isolated);
}

/// BFS distances from every vertex in `sources` (multi-source).
inline std::vector<Distance> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<Distance> dist(g.order());
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    g.check_vertex(s);
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

/// Length of a shortest u-v path.
inline Distance distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  const Vertex src[] = {u};
  return bfs_distances(g, src)[v];
}

/// min over x in `targets` of distance(g, w, x). Throws on an empty target set.
inline Distance distance_to_set(const Graph& g, Vertex w, std::span<const Vertex> targets) {
  if (targets.empty()) throw PreconditionError("distance_to_set: target set is empty");
  g.check_vertex(w);
  return bfs_distances(g, targets)[w];
}

/// The n = 0 graph and a single vertex both count as connected.
inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const Vertex src[] = {0};
  const auto dist = bfs_distances(g, src);
  return std::all_of(dist.begin(), dist.end(), [](const Distance& d) { return d.has_value(); });
}

struct Bipartition {
  std::vector<Vertex> first;   // holds the smallest vertex of each component
  std::vector<Vertex> second;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Two-colouring of `g`, or std::nullopt when `g` has an odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex w = 0; w < g.order(); ++w) (side[w] == 0 ? parts.first : parts.second).push_back(w);
  return parts;
}

/// Small named graphs used by fixtures and examples.
namespace graphs {

inline Graph empty(std::size_t n) { return Graph(n, {}); }

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, std::move(edges));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, std::move(edges));
}

/// K_{1,leaves} with centre 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

}  // namespace graphs

}  // namespace mcover
