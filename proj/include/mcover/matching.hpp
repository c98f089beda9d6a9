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
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mcover/errors.hpp"
#include "mcover/graph.hpp"

namespace mcover {

/// Largest edge count accepted by the exhaustive routines below.
inline constexpr std::size_t kEnumerationEdgeGuard = 32;

/// A set of pairwise vertex-disjoint edges of one particular graph. The
/// binding is by graph fingerprint; mixing graphs is a PreconditionError.
class Matching {
 public:
  Matching(const Graph& g, std::vector<Edge> edges)
      : edges_(std::move(edges)), fingerprint_(g.fingerprint()) {
    std::sort(edges_.begin(), edges_.end());
    std::vector<bool> used(g.order(), false);
    for (const Edge& e : edges_) {
      g.check_edge(e);
      if (used[e.u()] || used[e.v()]) {
        throw PreconditionError("edges sharing a vertex do not form a matching: " + e.to_string());
      }
      used[e.u()] = used[e.v()] = true;
    }
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  bool contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }
  bool covers(Vertex w) const {
    return std::any_of(edges_.begin(), edges_.end(), [w](const Edge& e) { return e.touches(w); });
  }

  void check_bound_to(const Graph& g) const {
    if (fingerprint_ != g.fingerprint()) {
      throw PreconditionError("matching is bound to a different graph");
    }
  }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.fingerprint_ == b.fingerprint_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const Matching& a, const Matching& b) {
    if (a.edges_ != b.edges_) return a.edges_ < b.edges_;
    return a.fingerprint_ < b.fingerprint_;
  }

 private:
  std::vector<Edge> edges_;
  std::uint64_t fingerprint_;
};

/// Every maximum matching of a graph, sorted lexicographically.
class MatchingSet {
 public:
  MatchingSet(Graph graph, std::size_t nu, std::vector<Matching> members)
      : graph_(std::move(graph)), nu_(nu), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
  }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t nu() const noexcept { return nu_; }
  const std::vector<Matching>& matchings() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

 private:
  Graph graph_;
  std::size_t nu_;
  std::vector<Matching> members_;
};

namespace detail {

// Edmonds' augmenting-path search with blossom contraction, O(n^3).
// Exposed vertices are processed in increasing order and neighbours are
// scanned in sorted order, so the result is a pure function of the graph.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : g_(g), n_(g.order()), mate_(n_, kNone) {}

  std::vector<Edge> run() {
    for (std::size_t root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      std::size_t end = find_augmenting_path(root);
      while (end != kNone) {
        const std::size_t prev = parent_[end];
        const std::size_t next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    std::vector<Edge> out;
    for (std::size_t w = 0; w < n_; ++w) {
      if (mate_[w] != kNone && w < mate_[w]) {
        out.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(mate_[w]));
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t lowest_common_base(std::size_t a, std::size_t b) {
    std::vector<bool> on_path(n_, false);
    for (;;) {
      a = base_[a];
      on_path[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_blossom_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Returns the exposed endpoint of an augmenting path from `root`, or kNone.
  std::size_t find_augmenting_path(std::size_t root) {
    in_tree_.assign(n_, false);
    parent_.assign(n_, kNone);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), std::size_t{0});
    std::deque<std::size_t> queue{root};
    in_tree_[root] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (Vertex to_v : g_.neighbors(static_cast<Vertex>(v))) {
        const std::size_t to = to_v;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const std::size_t b = lowest_common_base(v, to);
          in_blossom_.assign(n_, false);
          mark_blossom_path(v, b, to);
          mark_blossom_path(to, b, v);
          for (std::size_t w = 0; w < n_; ++w) {
            if (!in_blossom_[base_[w]]) continue;
            base_[w] = b;
            if (!in_tree_[w]) {
              in_tree_[w] = true;
              queue.push_back(w);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          in_tree_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
};

inline void check_enumeration_guard(const Graph& g, const char* what) {
  if (g.size() > kEnumerationEdgeGuard) {
    throw GuardExceeded(std::string(what) + ": " + std::to_string(g.size()) +
                        " edges exceeds the guard of " + std::to_string(kEnumerationEdgeGuard));
  }
}

// Depth-first walk over all matchings: edge i is either skipped or, when both
// endpoints are free, taken. `visit` sees each matching exactly once.
template <typename Visit>
void for_each_matching(const Graph& g, std::size_t i, std::vector<bool>& used,
                       std::vector<Edge>& chosen, Visit& visit) {
  const auto& edges = g.edges();
  if (i == edges.size()) {
    visit(chosen);
    return;
  }
  for_each_matching(g, i + 1, used, chosen, visit);
  const Edge& e = edges[i];
  if (used[e.u()] || used[e.v()]) return;
  used[e.u()] = used[e.v()] = true;
  chosen.push_back(e);
  for_each_matching(g, i + 1, used, chosen, visit);
  chosen.pop_back();
  used[e.u()] = used[e.v()] = false;
}

}  // namespace detail

/// One maximum matching, computed with Edmonds' blossom algorithm.
inline Matching maximum_matching(const Graph& g) {
  return Matching(g, detail::BlossomMatcher(g).run());
}

inline std::size_t matching_number(const Graph& g) { return detail::BlossomMatcher(g).run().size(); }

/// Largest matching size by exhaustive backtracking. Test oracle; |E| <= 32.
inline std::size_t brute_force_matching_number(const Graph& g) {
  detail::check_enumeration_guard(g, "brute_force_matching_number");
  std::size_t best = 0;
  std::vector<bool> used(g.order(), false);
  std::vector<Edge> chosen;
  auto visit = [&best](const std::vector<Edge>& m) { best = std::max(best, m.size()); };
  detail::for_each_matching(g, 0, used, chosen, visit);
  return best;
}

/// M(G): all maximum matchings, by exhaustive backtracking. |E| <= 32.
/// Never empty; when the graph is edgeless the only member is the empty matching.
inline MatchingSet enumerate_maximum_matchings(const Graph& g) {
  detail::check_enumeration_guard(g, "enumerate_maximum_matchings");
  std::size_t best = 0;
  std::vector<std::vector<Edge>> found;
  std::vector<bool> used(g.order(), false);
  std::vector<Edge> chosen;
  auto visit = [&](const std::vector<Edge>& m) {
    if (m.size() > best) {
      best = m.size();
      found.clear();
    }
    if (m.size() == best) found.push_back(m);
  };
  detail::for_each_matching(g, 0, used, chosen, visit);
  std::vector<Matching> members;
  members.reserve(found.size());
  for (auto& m : found) members.emplace_back(g, std::move(m));
  return MatchingSet(g, best, std::move(members));
}

/// M(e): the members of `ms` containing `e`, in order. May be empty.
inline std::vector<Matching> matchings_containing(const MatchingSet& ms, const Edge& e) {
  ms.graph().check_edge(e);
  std::vector<Matching> out;
  for (const Matching& f : ms) {
    if (f.contains(e)) out.push_back(f);
  }
  return out;
}

/// A(F) and B(F): the vertices covered and missed by a matching.
struct VertexPartition {
  std::vector<Vertex> covered;
  std::vector<Vertex> missed;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

inline VertexPartition covered_and_missed(const Graph& g, const Matching& f) {
  f.check_bound_to(g);
  std::vector<bool> hit(g.order(), false);
  for (const Edge& e : f.edges()) hit[e.u()] = hit[e.v()] = true;
  VertexPartition parts;
  for (Vertex w = 0; w < g.order(); ++w) (hit[w] ? parts.covered : parts.missed).push_back(w);
  return parts;
}

inline bool is_perfect(const Graph& g, const Matching& f) {
  f.check_bound_to(g);
  return 2 * f.size() == g.order();
}

inline bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

}  // namespace mcover
