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

// Test-only reference implementations. None of these call into the library's
// algorithms; they only use plain pairs of ints.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mcover::testing {

using Pair = std::pair<int, int>;
using PairList = std::vector<Pair>;

/// graph6 decoder that expands every byte into a '0'/'1' string first.
inline std::pair<int, PairList> reference_graph6_decode(const std::string& code) {
  const int n = code.at(0) - 63;
  std::string bits;
  for (std::size_t i = 1; i < code.size(); ++i) {
    const int b = code[i] - 63;
    for (int k = 5; k >= 0; --k) bits.push_back(((b >> k) & 1) ? '1' : '0');
  }
  PairList edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (bits.at(k) == '1') edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  return {n, edges};
}

/// Every maximum matching, found by testing all 2^|E| edge subsets.
/// Only for |E| <= 20.
inline std::pair<std::size_t, std::set<PairList>> subset_maximum_matchings(const PairList& edges) {
  const std::size_t m = edges.size();
  std::size_t best = 0;
  std::set<PairList> found;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::uint64_t used = 0;
    PairList chosen;
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k) {
      if (!((mask >> k) & 1U)) continue;
      const auto [u, v] = edges[k];
      if ((used >> u) & 1U || (used >> v) & 1U) ok = false;
      used |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      chosen.push_back(edges[k]);
    }
    if (!ok) continue;
    if (chosen.size() > best) {
      best = chosen.size();
      found.clear();
    }
    if (chosen.size() == best) {
      std::sort(chosen.begin(), chosen.end());
      found.insert(chosen);
    }
  }
  return {best, found};
}

inline constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

/// All-pairs shortest paths by Floyd-Warshall; kInfinity when unreachable.
inline std::vector<std::vector<int>> floyd_warshall(int n, const PairList& edges) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInfinity));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace mcover::testing
