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

// Allowed edges, the core subgraph C(G), matching covered and minimal
// matching covered graphs, and the constructive witnesses behind the claim
// that minimal matching covered graphs have a perfect matching.
//
// An edge is allowed when some maximum matching contains it. A graph is
// matching covered when every edge is allowed (edgeless graphs qualify
// vacuously) and minimal matching covered when, in addition, deleting any
// single edge leaves a graph that is not matching covered. The deletion test
// keeps the vertex set as is.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcover/errors.hpp"
#include "mcover/graph.hpp"
#include "mcover/graph_io.hpp"
#include "mcover/matching.hpp"

namespace mcover {

/// How graphs that leave the "no isolated vertices" class are judged when
/// testing minimality. kLiteral applies the formulas as written: G - e is
/// compared with its core on the same vertex set, so an edgeless G - e is
/// matching covered. kClassRestricted drops isolated vertices first and does
/// not count the resulting empty graph as matching covered (so K2 becomes
/// minimal).
enum class MinimalityReading { kLiteral, kClassRestricted };

/// graph6 when possible, else the edge list on one line. Used in diagnostics.
inline std::string describe_graph(const Graph& g) {
  if (g.order() <= kMaxGraph6Order) return to_graph6(g);
  std::string out = "n=" + std::to_string(g.order());
  for (const Edge& e : g.edges()) out += " " + e.to_string();
  return out;
}

namespace detail {

inline bool is_allowed_given_nu(const Graph& g, const Edge& e, std::size_t nu) {
  return matching_number(delete_vertices(g, {e.u(), e.v()})) + 1 == nu;
}

}  // namespace detail

/// True iff some maximum matching contains `e`; tested as
/// nu(G - u - v) = nu(G) - 1.
inline bool is_allowed(const Graph& g, const Edge& e) {
  g.check_edge(e);
  return detail::is_allowed_given_nu(g, e, matching_number(g));
}

/// Allowed edges of `g` in canonical order.
inline std::vector<Edge> allowed_edges(const Graph& g) {
  const std::size_t nu = matching_number(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (detail::is_allowed_given_nu(g, e, nu)) out.push_back(e);
  }
  return out;
}

/// The union of all members of M(G). Enumeration-based oracle for allowed_edges.
inline std::vector<Edge> allowed_edges_by_enumeration(const MatchingSet& ms) {
  std::vector<Edge> out;
  for (const Matching& f : ms) out.insert(out.end(), f.edges().begin(), f.edges().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// C(G): same vertex set, only the allowed edges. Applied once; C(C(G)) may
/// differ from C(G).
inline Graph core_subgraph(const Graph& g) { return Graph(g.order(), allowed_edges(g)); }

inline bool is_matching_covered(const Graph& g) {
  const std::size_t nu = matching_number(g);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return detail::is_allowed_given_nu(g, e, nu); });
}

inline bool is_minimal_matching_covered(const Graph& g,
                                        MinimalityReading reading = MinimalityReading::kLiteral) {
  if (!is_matching_covered(g)) return false;
  for (const Edge& e : g.edges()) {
    const Graph rest = delete_edge(g, e);
    if (reading == MinimalityReading::kClassRestricted && rest.size() == 0) continue;
    if (is_matching_covered(rest)) return false;
  }
  return true;
}

struct MinimizeStep {
  Edge deleted;                  // labels of the graph before this step
  std::vector<Vertex> dropped;   // vertices isolated by the deletion, same labels
};

struct Minimized {
  Graph graph;
  std::vector<Vertex> dropped_initially;  // isolated vertices of the input
  std::vector<MinimizeStep> trace;
};

/// Greedy edge deletion down to a minimal matching covered graph. Isolated
/// vertices are dropped on entry and after every deletion, relabelling the
/// survivors by increasing index. At each step the lexicographically smallest
/// edge whose deletion keeps the graph matching covered is removed.
inline Minimized minimize(const Graph& input) {
  if (!is_matching_covered(input)) {
    throw PreconditionError("minimize: graph " + describe_graph(input) +
                            " is not matching covered");
  }
  Minimized out{drop_isolated(input), isolated_vertices(input), {}};
  for (;;) {
    std::optional<Graph> next;
    for (const Edge& e : out.graph.edges()) {
      Graph candidate = delete_edge(out.graph, e);
      if (!is_matching_covered(candidate)) continue;
      auto dropped = isolated_vertices(candidate);
      out.trace.push_back({e, dropped});
      next = delete_vertices(candidate, dropped);
      break;
    }
    if (!next) return out;
    out.graph = std::move(*next);
  }
}

/// mu_e(F) = min(rho(u, B(F)), rho(v, B(F))) for e = (u, v), where B(F) is the
/// set of vertices missed by F. Zero exactly when F misses u or v.
inline Distance mu(const Graph& g, const Edge& e, const Matching& f) {
  f.check_bound_to(g);
  g.check_edge(e);
  if (!is_connected(g)) throw PreconditionError("mu: graph is not connected");
  if (f.size() != matching_number(g)) throw PreconditionError("mu: matching is not maximum");
  const auto missed = covered_and_missed(g, f).missed;
  if (missed.empty()) throw PreconditionError("mu: matching is perfect, so B(F) is empty");
  const auto dist = bfs_distances(g, missed);
  const Distance du = dist[e.u()];
  const Distance dv = dist[e.v()];
  if (!du) return dv;
  if (!dv) return du;
  return std::min(*du, *dv);
}

namespace detail {

inline void check_lemma_class(const Graph& g, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": graph is not connected");
  if (has_perfect_matching(g)) throw PreconditionError(std::string(op) + ": graph has a perfect matching");
  if (!is_matching_covered(g)) throw PreconditionError(std::string(op) + ": graph is not matching covered");
}

// The mu-minimising member of M(G) (first in order on ties). Throws Refutation
// when the minimum is not zero.
inline Matching lemma1_witness_in(const Graph& g, const MatchingSet& ms, const Edge& e) {
  const Matching* best = nullptr;
  std::size_t best_mu = 0;
  for (const Matching& f : ms) {
    const Distance d = mu(g, e, f);
    if (!d) throw InternalError("mu unreachable on a connected graph");
    if (best == nullptr || *d < best_mu) {
      best = &f;
      best_mu = *d;
    }
  }
  if (best == nullptr) throw InternalError("M(G) is empty");
  if (best_mu != 0) {
    throw Refutation("lemma1", describe_graph(g),
                     "no maximum matching misses an endpoint of " + e.to_string() +
                         " (minimum mu = " + std::to_string(best_mu) + ")");
  }
  return *best;
}

}  // namespace detail

/// A maximum matching missing u or v, for e = (u, v) in a connected matching
/// covered graph without a perfect matching.
inline Matching lemma1_witness(const Graph& g, const Edge& e) {
  g.check_edge(e);
  detail::check_lemma_class(g, "lemma1_witness");
  return detail::lemma1_witness_in(g, enumerate_maximum_matchings(g), e);
}

namespace detail {

// Smallest edge other than e that is disallowed in G - e; nullopt if none.
inline std::optional<Edge> first_disallowed_after_deleting(const Graph& g, const Edge& e) {
  const Graph rest = delete_edge(g, e);
  const std::size_t nu = matching_number(rest);
  for (const Edge& f : rest.edges()) {
    if (!is_allowed_given_nu(rest, f, nu)) return f;
  }
  return std::nullopt;
}

inline bool is_subset(const std::vector<Matching>& small, const std::vector<Matching>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace detail

/// For matching covered g where G - e is not matching covered: the smallest
/// edge d != e disallowed in G - e. Every maximum matching of G through d then
/// passes through e; that inclusion is checked by enumeration when |E| <= 32.
inline Edge find_dominated_edge(const Graph& g, const Edge& e) {
  g.check_edge(e);
  if (!is_matching_covered(g)) {
    throw PreconditionError("find_dominated_edge: graph is not matching covered");
  }
  const auto dominated = detail::first_disallowed_after_deleting(g, e);
  if (!dominated) {
    throw PreconditionError("find_dominated_edge: G - " + e.to_string() +
                            " is still matching covered");
  }
  if (g.size() <= kEnumerationEdgeGuard) {
    const MatchingSet ms = enumerate_maximum_matchings(g);
    if (!detail::is_subset(matchings_containing(ms, *dominated), matchings_containing(ms, e))) {
      throw Refutation("dominated-edge", describe_graph(g),
                       "M" + dominated->to_string() + " is not contained in M" + e.to_string());
    }
  }
  return *dominated;
}

/// The edge sequence e_0, e_1, ... with e_{k+1} dominated by e_k, run until
/// the first repeat e_i = e_j. The last step gives distinct edges with equal
/// M(e).
struct WitnessSequence {
  std::vector<Edge> edges;
  std::size_t repeat_i = 0;
  std::size_t repeat_j = 0;
  Edge first{0, 1};
  Edge second{0, 1};
  std::vector<Matching> shared;  // M(first) == M(second)
};

/// Requires g minimal matching covered with at least one edge and at most 32
/// edges (each step is checked by enumeration).
inline WitnessSequence theorem_witness_sequence(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("theorem_witness_sequence: graph has no edges");
  if (!is_minimal_matching_covered(g)) {
    throw PreconditionError("theorem_witness_sequence: graph is not minimal matching covered");
  }
  const MatchingSet ms = enumerate_maximum_matchings(g);
  std::map<Edge, std::vector<Matching>> through;
  for (const Edge& e : g.edges()) through.emplace(e, matchings_containing(ms, e));

  WitnessSequence w;
  std::map<Edge, std::size_t> first_seen;
  Edge current = g.edges().front();
  for (;;) {
    const auto [it, fresh] = first_seen.emplace(current, w.edges.size());
    w.edges.push_back(current);
    if (!fresh) {
      w.repeat_i = it->second;
      w.repeat_j = w.edges.size() - 1;
      break;
    }
    if (w.edges.size() > g.size() + 1) {
      throw InternalError("witness sequence ran past |E| + 1 steps without repeating");
    }
    const auto next = detail::first_disallowed_after_deleting(g, current);
    if (!next) throw InternalError("minimal graph has an edge whose deletion keeps it covered");
    if (!detail::is_subset(through.at(*next), through.at(current))) {
      throw Refutation("dominated-edge", describe_graph(g),
                       "M" + next->to_string() + " is not contained in M" + current.to_string());
    }
    current = *next;
  }
  w.first = w.edges[w.repeat_j - 1];
  w.second = w.edges[w.repeat_j];
  if (w.first == w.second) throw InternalError("witness pair is a repeated edge");
  if (through.at(w.first) != through.at(w.second)) {
    throw Refutation("theorem-witness", describe_graph(g),
                     "M" + w.first.to_string() + " differs from M" + w.second.to_string());
  }
  w.shared = through.at(w.first);
  return w;
}

struct CoverReport {
  std::size_t nu = 0;
  std::vector<Edge> allowed;
  std::vector<Edge> disallowed;
  bool is_matching_covered = false;
  bool is_minimal_matching_covered = false;
  bool has_perfect_matching = false;
};

inline CoverReport analyze(const Graph& g) {
  CoverReport r;
  r.nu = matching_number(g);
  for (const Edge& e : g.edges()) {
    (detail::is_allowed_given_nu(g, e, r.nu) ? r.allowed : r.disallowed).push_back(e);
  }
  r.is_matching_covered = r.disallowed.empty();
  r.is_minimal_matching_covered = r.is_matching_covered && is_minimal_matching_covered(g);
  r.has_perfect_matching = has_perfect_matching(g);
  return r;
}

}  // namespace mcover
