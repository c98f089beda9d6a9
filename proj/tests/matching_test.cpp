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

#include "mcover/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "gtest/gtest.h"
#include "mcover/sweep.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace mcover {
namespace {

using testing::E;
using testing::make_graph;

std::vector<std::vector<Edge>> members(const MatchingSet& ms) {
  std::vector<std::vector<Edge>> out;
  for (const Matching& f : ms) out.push_back(f.edges());
  return out;
}

bool is_valid_matching(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<int> hits(g.order(), 0);
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) return false;
    if (++hits[e.u()] > 1 || ++hits[e.v()] > 1) return false;
  }
  return true;
}

std::size_t boost_matching_number(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.order());
  for (const Edge& e : g.edges()) boost::add_edge(e.u(), e.v(), bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.order());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return boost::matching_size(bg, &mate[0]);
}

TEST(Matching, RejectsInvalidEdgeSets) {
  const Graph p3 = graphs::path(3);
  EXPECT_THROW(Matching(p3, E({{0, 1}, {1, 2}})), PreconditionError);
  EXPECT_THROW(Matching(p3, E({{0, 2}})), PreconditionError);
  EXPECT_NO_THROW(Matching(p3, E({{1, 2}})));
}

TEST(MaximumMatching, SpecExamples) {
  const Matching c4 = maximum_matching(graphs::cycle(4));
  EXPECT_EQ(c4.size(), 2U);
  EXPECT_TRUE(is_valid_matching(graphs::cycle(4), c4.edges()));
  EXPECT_EQ(maximum_matching(graphs::complete(3)).size(), 1U);
  EXPECT_TRUE(maximum_matching(graphs::empty(3)).empty());
}

TEST(MaximumMatching, IsDeterministic) {
  const Graph g = random_graph(30, 0.1, 5);
  EXPECT_EQ(maximum_matching(g), maximum_matching(g));
}

TEST(MatchingNumber, SpecExamples) {
  EXPECT_EQ(matching_number(graphs::path(4)), 2U);
  EXPECT_EQ(matching_number(graphs::complete(4)), 2U);
  EXPECT_EQ(matching_number(graphs::complete(2)), 1U);
  EXPECT_EQ(brute_force_matching_number(graphs::path(4)), 2U);
  EXPECT_EQ(brute_force_matching_number(graphs::complete(4)), 2U);
  EXPECT_EQ(brute_force_matching_number(graphs::complete(2)), 1U);
  EXPECT_EQ(brute_force_matching_number(graphs::path(3)), 1U);
  EXPECT_EQ(brute_force_matching_number(graphs::cycle(4)), 2U);
}

TEST(MatchingNumber, GuardRejectsLargeEdgeSets) {
  EXPECT_THROW(brute_force_matching_number(graphs::complete(9)), GuardExceeded);
  EXPECT_THROW(enumerate_maximum_matchings(graphs::complete(9)), GuardExceeded);
  EXPECT_NO_THROW(enumerate_maximum_matchings(graphs::complete(8)));
}

// Blossom-heavy shapes: odd cycles joined by paths, petersen.
TEST(MatchingNumber, BlossomShapes) {
  const Graph two_triangles = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(matching_number(two_triangles), 3U);
  const Graph petersen = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                         {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  EXPECT_EQ(matching_number(petersen), 5U);
  const Graph flower = make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}, {5, 6}});
  EXPECT_EQ(matching_number(flower), brute_force_matching_number(flower));
}

TEST(MatchingNumber, BlossomEqualsBacktrackingExhaustively) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      ASSERT_EQ(matching_number(g), brute_force_matching_number(g)) << to_graph6(g);
      ASSERT_TRUE(is_valid_matching(g, maximum_matching(g).edges()));
    }
  }
}

TEST(MatchingNumber, BlossomEqualsBacktrackingOnRandomGraphs) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Graph g = random_graph(10, 0.3, sample_seed(2026, i));
    ASSERT_EQ(matching_number(g), brute_force_matching_number(g)) << to_graph6(g);
  }
}

TEST(MatchingNumber, AgreesWithBoostOnLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 20 + seed % 41;
    const double p = 1.5 / static_cast<double>(n) + static_cast<double>(seed % 7) * 0.02;
    const Graph g = random_graph(n, p, seed);
    const Matching m = maximum_matching(g);
    ASSERT_TRUE(is_valid_matching(g, m.edges()));
    ASSERT_EQ(m.size(), boost_matching_number(g)) << "seed " << seed;
  }
}

TEST(MatchingNumber, DeletingAnEdgeLowersNuByAtMostOne) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      const std::size_t nu = matching_number(g);
      for (const Edge& e : g.edges()) {
        const std::size_t after = matching_number(delete_edge(g, e));
        ASSERT_TRUE(after == nu || after + 1 == nu);
      }
    }
  }
}

TEST(Enumerate, SpecExamples) {
  const MatchingSet c4 = enumerate_maximum_matchings(graphs::cycle(4));
  EXPECT_EQ(c4.nu(), 2U);
  EXPECT_EQ(members(c4), (std::vector{E({{0, 1}, {2, 3}}), E({{0, 3}, {1, 2}})}));

  const MatchingSet k3 = enumerate_maximum_matchings(graphs::complete(3));
  EXPECT_EQ(k3.nu(), 1U);
  EXPECT_EQ(members(k3), (std::vector{E({{0, 1}}), E({{0, 2}}), E({{1, 2}})}));

  const MatchingSet empty = enumerate_maximum_matchings(graphs::empty(2));
  EXPECT_EQ(empty.nu(), 0U);
  ASSERT_EQ(empty.size(), 1U);
  EXPECT_TRUE(empty.matchings().front().empty());
}

TEST(Enumerate, MatchesSubsetOracle) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      const MatchingSet ms = enumerate_maximum_matchings(g);
      const auto [nu, expected] = testing::subset_maximum_matchings(testing::to_pairs(g));
      ASSERT_EQ(ms.nu(), nu);
      std::set<testing::PairList> got;
      for (const Matching& f : ms) {
        ASSERT_EQ(f.size(), nu);
        got.insert(testing::to_pairs(f.edges()));
      }
      ASSERT_EQ(got.size(), ms.size()) << "duplicates";
      ASSERT_EQ(got, expected) << to_graph6(g);
      ASSERT_TRUE(std::is_sorted(ms.begin(), ms.end()));
    }
  }
}

TEST(Enumerate, MembersAreMaximumOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_graph(8, 0.4, seed);
    const MatchingSet ms = enumerate_maximum_matchings(g);
    EXPECT_EQ(ms.nu(), brute_force_matching_number(g));
    for (const Matching& f : ms) ASSERT_TRUE(is_valid_matching(g, f.edges()));
    const auto [nu, expected] = testing::subset_maximum_matchings(testing::to_pairs(g));
    EXPECT_EQ(ms.size(), expected.size());
  }
}

TEST(MatchingsContaining, SpecExamples) {
  const MatchingSet c4 = enumerate_maximum_matchings(graphs::cycle(4));
  const auto through01 = matchings_containing(c4, Edge(0, 1));
  ASSERT_EQ(through01.size(), 1U);
  EXPECT_EQ(through01.front().edges(), E({{0, 1}, {2, 3}}));
  const auto through12 = matchings_containing(c4, Edge(1, 2));
  ASSERT_EQ(through12.size(), 1U);
  EXPECT_EQ(through12.front().edges(), E({{0, 3}, {1, 2}}));

  const MatchingSet p4 = enumerate_maximum_matchings(graphs::path(4));
  EXPECT_TRUE(matchings_containing(p4, Edge(1, 2)).empty());
  EXPECT_THROW(matchings_containing(p4, Edge(0, 2)), PreconditionError);
}

TEST(CoveredAndMissed, SpecExamples) {
  const Graph k3 = graphs::complete(3);
  EXPECT_EQ(covered_and_missed(k3, Matching(k3, E({{0, 1}}))), (VertexPartition{{0, 1}, {2}}));
  const Graph c4 = graphs::cycle(4);
  EXPECT_EQ(covered_and_missed(c4, Matching(c4, E({{0, 1}, {2, 3}}))),
            (VertexPartition{{0, 1, 2, 3}, {}}));
  EXPECT_EQ(covered_and_missed(c4, Matching(c4, {})), (VertexPartition{{}, {0, 1, 2, 3}}));
  EXPECT_THROW(covered_and_missed(k3, Matching(c4, E({{0, 1}}))), PreconditionError);
}

TEST(CoveredAndMissed, PartitionsTheVertices) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      for (const Matching& f : enumerate_maximum_matchings(g)) {
        const auto [a, b] = covered_and_missed(g, f);
        ASSERT_EQ(a.size() + b.size(), n);
        std::vector<Vertex> all = a;
        all.insert(all.end(), b.begin(), b.end());
        std::sort(all.begin(), all.end());
        for (Vertex w = 0; w < n; ++w) ASSERT_EQ(all[w], w);
        ASSERT_EQ(a.size(), 2 * f.size());
      }
    }
  }
}

TEST(Perfect, SpecExamples) {
  const Graph c4 = graphs::cycle(4);
  EXPECT_TRUE(is_perfect(c4, Matching(c4, E({{0, 1}, {2, 3}}))));
  const Graph k3 = graphs::complete(3);
  EXPECT_FALSE(is_perfect(k3, Matching(k3, E({{0, 1}}))));
  EXPECT_TRUE(is_perfect(Graph(), Matching(Graph(), {})));
  EXPECT_THROW(is_perfect(k3, Matching(c4, {})), PreconditionError);

  EXPECT_TRUE(has_perfect_matching(c4));
  EXPECT_FALSE(has_perfect_matching(k3));
  EXPECT_TRUE(has_perfect_matching(make_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(has_perfect_matching(graphs::star(3)));
}

}  // namespace
}  // namespace mcover
