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

// Falsification sweeps over graph populations: every labelled graph up to a
// given order, seeded random graphs, or a graph6 stream from an external
// generator. Results are independent of the number of worker threads.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "mcover/cover.hpp"
#include "mcover/errors.hpp"
#include "mcover/graph.hpp"
#include "mcover/graph_io.hpp"
#include "mcover/matching.hpp"

namespace mcover {

inline constexpr std::size_t kMaxExhaustiveOrder = 8;

// ---------------------------------------------------------------------------
// Populations

/// Number of vertex pairs, n choose 2.
constexpr std::size_t pair_count(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }

/// The labelled graph on n vertices whose edge set is the bitmask `mask`; bit
/// k selects the k-th pair in graph6 column order (0,1), (0,2), (1,2), (0,3), ...
inline Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      if ((mask >> k) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

/// All 2^(n choose 2) labelled graphs on n vertices, in bitmask order.
class LabeledGraphs {
 public:
  explicit LabeledGraphs(std::size_t n) : n_(n) {
    if (n > kMaxExhaustiveOrder) {
      throw PreconditionError("labelled enumeration supports n <= 8, got " + std::to_string(n));
    }
  }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const { return labeled_graph(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
  };

  std::uint64_t size() const noexcept { return std::uint64_t{1} << pair_count(n_); }
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, size()}; }

 private:
  std::size_t n_;
};

inline LabeledGraphs enumerate_labeled_graphs(std::size_t n) { return LabeledGraphs(n); }

/// SplitMix64 (Steele, Lea, Flood 2014). The constants are part of the
/// reproducibility contract: state advances by 0x9E3779B97F4A7C15 and the
/// output is mixed with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  constexpr double next_unit() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Output number `index` (0-based) of the stream seeded with `seed`.
  static constexpr std::uint64_t nth(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
  }

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

/// G(n, p): each pair, in graph6 column order, is kept iff the next uniform
/// draw of SplitMix64(seed) is below p.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (rng.next_unit() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

/// Seed of sample `index` in a random sweep seeded with `seed`.
constexpr std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64::nth(seed, index);
}

struct Graph6Record {
  Graph graph;
  std::size_t line = 0;
};

/// Lazily decodes newline-delimited graph6 from a stream. Blank lines and
/// ">>graph6<<" headers are accepted. In strict mode a malformed line throws a
/// ParseError naming the line; in skip mode it is recorded and passed over.
class Graph6Stream {
 public:
  enum class Policy { kStrict, kSkip };

  struct Skipped {
    std::size_t line;
    std::string message;
  };

  explicit Graph6Stream(std::istream& in, Policy policy = Policy::kStrict)
      : in_(in), policy_(policy) {}

  std::optional<Graph6Record> next() {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      if (text.empty()) continue;
      try {
        return Graph6Record{parse_graph6(text), line_};
      } catch (const ParseError& err) {
        if (policy_ == Policy::kStrict) {
          throw ParseError(std::string("graph6 stream: ") + err.what(), line_,
                           ParseError::Unit::kLine);
        }
        skipped_.push_back({line_, err.what()});
      }
    }
    return std::nullopt;
  }

  const std::vector<Skipped>& skipped() const noexcept { return skipped_; }

 private:
  std::istream& in_;
  Policy policy_;
  std::size_t line_ = 0;
  std::vector<Skipped> skipped_;
};

inline Graph6Stream ingest_graph6_stream(std::istream& in,
                                         Graph6Stream::Policy policy = Graph6Stream::Policy::kStrict) {
  return Graph6Stream(in, policy);
}

// ---------------------------------------------------------------------------
// Properties

enum class Property {
  kTheorem,
  kTheoremClassRestricted,
  kLemma1,
  kLemma2,
  kCorollary,
  kOracleNu,
  kOracleAllowed,
};

inline constexpr std::array<Property, 7> kAllProperties = {
    Property::kTheorem,   Property::kTheoremClassRestricted, Property::kLemma1,
    Property::kLemma2,    Property::kCorollary,              Property::kOracleNu,
    Property::kOracleAllowed};

inline constexpr std::string_view property_name(Property p) {
  switch (p) {
    case Property::kTheorem: return "theorem";
    case Property::kTheoremClassRestricted: return "theorem-class-restricted";
    case Property::kLemma1: return "lemma1";
    case Property::kLemma2: return "lemma2";
    case Property::kCorollary: return "corollary";
    case Property::kOracleNu: return "oracle-nu";
    case Property::kOracleAllowed: return "oracle-allowed";
  }
  return "?";
}

/// Parses a property name as accepted on the command line. The
/// class-restricted theorem reading rides along with "theorem" and is not
/// requested on its own.
inline Property parse_property(std::string_view name) {
  for (Property p : kAllProperties) {
    if (p != Property::kTheoremClassRestricted && property_name(p) == name) return p;
  }
  throw PreconditionError("unknown property '" + std::string(name) +
                          "' (expected theorem, lemma1, lemma2, corollary, oracle-nu, oracle-allowed)");
}

// ---------------------------------------------------------------------------
// Configuration and report

struct SweepConfig {
  enum class Mode { kExhaustive, kRandom, kIngest };

  Mode mode = Mode::kExhaustive;
  std::size_t max_n = 6;                  // exhaustive: orders 0..max_n; random: the order
  std::optional<double> edge_probability;  // random only
  std::uint64_t sample_count = 0;          // random only
  std::uint64_t seed = 0;                  // random only
  std::vector<Property> properties;
  unsigned jobs = 1;

  void validate() const {
    if (properties.empty()) throw PreconditionError("sweep: no properties requested");
    if (jobs == 0) throw PreconditionError("sweep: jobs must be positive");
    switch (mode) {
      case Mode::kExhaustive:
        if (max_n > kMaxExhaustiveOrder) {
          throw PreconditionError("sweep: exhaustive mode supports max_n <= 8");
        }
        if (edge_probability) throw PreconditionError("sweep: edge probability applies to random mode only");
        break;
      case Mode::kRandom:
        if (!edge_probability) throw PreconditionError("sweep: random mode needs an edge probability");
        if (!(*edge_probability >= 0.0 && *edge_probability <= 1.0)) {
          throw PreconditionError("sweep: edge probability must lie in [0, 1]");
        }
        if (max_n > kMaxGraph6Order) throw PreconditionError("sweep: random mode supports n <= 62");
        break;
      case Mode::kIngest:
        if (edge_probability) throw PreconditionError("sweep: edge probability applies to random mode only");
        break;
    }
  }
};

/// A failing graph and the property it fails.
struct Counterexample {
  Property property;
  std::size_t order;
  std::string graph6;

  // Minimal under (n, graph6) with property order as the final tie-break.
  friend bool operator<(const Counterexample& a, const Counterexample& b) {
    return std::tie(a.order, a.graph6, a.property) < std::tie(b.order, b.graph6, b.property);
  }
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct PropertyTally {
  std::uint64_t in_class = 0;     // graphs meeting the property's hypotheses
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;     // confirmed by the enumeration oracle
  std::uint64_t unconfirmed = 0;  // fast path failed but the oracle disagreed
  std::uint64_t skipped = 0;      // beyond the enumeration guard
  std::optional<Counterexample> first_counterexample;

  void merge(const PropertyTally& o) {
    in_class += o.in_class;
    passes += o.passes;
    failures += o.failures;
    unconfirmed += o.unconfirmed;
    skipped += o.skipped;
    if (o.first_counterexample &&
        (!first_counterexample || *o.first_counterexample < *first_counterexample)) {
      first_counterexample = o.first_counterexample;
    }
  }
  friend bool operator==(const PropertyTally&, const PropertyTally&) = default;
};

struct SweepReport {
  SweepConfig config;
  std::uint64_t population = 0;
  std::vector<std::pair<Property, PropertyTally>> tallies;  // in kAllProperties order
  std::optional<Counterexample> first_counterexample;
  double wall_time_seconds = 0.0;

  const PropertyTally& tally(Property p) const {
    for (const auto& [q, t] : tallies) {
      if (q == p) return t;
    }
    throw PreconditionError("property " + std::string(property_name(p)) + " was not evaluated");
  }
  std::uint64_t total_failures() const {
    std::uint64_t sum = 0;
    for (const auto& [p, t] : tallies) sum += t.failures;
    return sum;
  }
  std::uint64_t total_unconfirmed() const {
    std::uint64_t sum = 0;
    for (const auto& [p, t] : tallies) sum += t.unconfirmed;
    return sum;
  }
};

// ---------------------------------------------------------------------------
// Per-graph evaluation

namespace detail {

// Enumeration-only route to matching-covered-ness, independent of the blossom code.
inline bool oracle_is_matching_covered(const Graph& g) {
  return allowed_edges_by_enumeration(enumerate_maximum_matchings(g)).size() == g.size();
}

inline bool oracle_is_minimal_matching_covered(const Graph& g, MinimalityReading reading) {
  if (!oracle_is_matching_covered(g)) return false;
  for (const Edge& e : g.edges()) {
    const Graph rest = delete_edge(g, e);
    if (reading == MinimalityReading::kClassRestricted && rest.size() == 0) continue;
    if (oracle_is_matching_covered(rest)) return false;
  }
  return true;
}

inline bool oracle_has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && 2 * brute_force_matching_number(g) == g.order();
}

// Quantities shared between properties, computed on first use.
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  bool within_guard() const { return g_.size() <= kEnumerationEdgeGuard; }
  bool connected() { return cached(connected_, [&] { return is_connected(g_); }); }
  bool matching_covered() { return cached(covered_, [&] { return is_matching_covered(g_); }); }
  bool perfect() { return cached(perfect_, [&] { return has_perfect_matching(g_); }); }
  const MatchingSet& maximum_matchings() {
    if (!ms_) ms_ = enumerate_maximum_matchings(g_);
    return *ms_;
  }
  const std::string& graph6() {
    if (!g6_) g6_ = describe_graph(g_);
    return *g6_;
  }

 private:
  template <typename F>
  static bool cached(std::optional<bool>& slot, F&& compute) {
    if (!slot) slot = compute();
    return *slot;
  }

  const Graph& g_;
  std::optional<bool> connected_;
  std::optional<bool> covered_;
  std::optional<bool> perfect_;
  std::optional<MatchingSet> ms_;
  std::optional<std::string> g6_;
};

enum class Verdict { kOutOfClass, kSkipped, kPass, kFail, kUnconfirmed };

inline Verdict check_theorem(GraphFacts& facts, MinimalityReading reading) {
  const Graph& g = facts.graph();
  if (g.size() == 0 || has_isolated_vertex(g)) return Verdict::kOutOfClass;
  if (!facts.matching_covered() || !is_minimal_matching_covered(g, reading)) {
    return Verdict::kOutOfClass;
  }
  if (facts.perfect()) return Verdict::kPass;
  if (!facts.within_guard()) return Verdict::kUnconfirmed;
  const bool confirmed =
      oracle_is_minimal_matching_covered(g, reading) && !oracle_has_perfect_matching(g);
  return confirmed ? Verdict::kFail : Verdict::kUnconfirmed;
}

// Hypotheses shared by both lemma parts: connected, matching covered, no
// perfect matching, at least one edge.
inline bool in_lemma_class(GraphFacts& facts) {
  const Graph& g = facts.graph();
  return g.size() > 0 && facts.connected() && !facts.perfect() && facts.matching_covered();
}

inline bool oracle_in_lemma_class(const Graph& g) {
  return g.size() > 0 && is_connected(g) && !oracle_has_perfect_matching(g) &&
         oracle_is_matching_covered(g);
}

inline Verdict check_lemma1(GraphFacts& facts) {
  if (!in_lemma_class(facts)) return Verdict::kOutOfClass;
  if (!facts.within_guard()) return Verdict::kSkipped;
  const Graph& g = facts.graph();
  const MatchingSet& ms = facts.maximum_matchings();
  for (const Edge& e : g.edges()) {
    try {
      (void)lemma1_witness_in(g, ms, e);
    } catch (const Refutation&) {
      return oracle_in_lemma_class(g) ? Verdict::kFail : Verdict::kUnconfirmed;
    }
  }
  return Verdict::kPass;
}

inline Verdict check_lemma2(GraphFacts& facts) {
  if (!in_lemma_class(facts)) return Verdict::kOutOfClass;
  if (!facts.within_guard()) return Verdict::kSkipped;
  const Graph& g = facts.graph();
  const MatchingSet& ms = facts.maximum_matchings();
  std::vector<std::vector<Matching>> images;
  images.reserve(g.size());
  for (const Edge& e : g.edges()) images.push_back(matchings_containing(ms, e));
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) == images.end()) return Verdict::kPass;
  return oracle_in_lemma_class(g) ? Verdict::kFail : Verdict::kUnconfirmed;
}

inline Verdict check_corollary(GraphFacts& facts) {
  const Graph& g = facts.graph();
  if (g.size() == 0 || !facts.connected()) return Verdict::kOutOfClass;
  const auto parts = bipartition(g);
  if (!parts || !facts.matching_covered()) return Verdict::kOutOfClass;
  if (!facts.within_guard()) return Verdict::kSkipped;

  std::vector<bool> ever_missed(g.order(), false);
  for (const Matching& f : facts.maximum_matchings()) {
    for (Vertex w : covered_and_missed(g, f).missed) ever_missed[w] = true;
  }
  // Either side may play the role of W.
  for (const auto* side : {&parts->first, &parts->second}) {
    const bool some = std::any_of(side->begin(), side->end(), [&](Vertex w) { return ever_missed[w]; });
    const bool all = std::all_of(side->begin(), side->end(), [&](Vertex w) { return ever_missed[w]; });
    if (some && !all) {
      return oracle_is_matching_covered(g) ? Verdict::kFail : Verdict::kUnconfirmed;
    }
  }
  return Verdict::kPass;
}

inline Verdict check_oracle_nu(GraphFacts& facts) {
  if (!facts.within_guard()) return Verdict::kSkipped;
  const Graph& g = facts.graph();
  return matching_number(g) == brute_force_matching_number(g) ? Verdict::kPass : Verdict::kFail;
}

inline Verdict check_oracle_allowed(GraphFacts& facts) {
  if (!facts.within_guard()) return Verdict::kSkipped;
  const Graph& g = facts.graph();
  return allowed_edges(g) == allowed_edges_by_enumeration(facts.maximum_matchings())
             ? Verdict::kPass
             : Verdict::kFail;
}

inline Verdict check_property(Property p, GraphFacts& facts) {
  switch (p) {
    case Property::kTheorem: return check_theorem(facts, MinimalityReading::kLiteral);
    case Property::kTheoremClassRestricted:
      return check_theorem(facts, MinimalityReading::kClassRestricted);
    case Property::kLemma1: return check_lemma1(facts);
    case Property::kLemma2: return check_lemma2(facts);
    case Property::kCorollary: return check_corollary(facts);
    case Property::kOracleNu: return check_oracle_nu(facts);
    case Property::kOracleAllowed: return check_oracle_allowed(facts);
  }
  return Verdict::kOutOfClass;
}

inline std::vector<Property> expand_properties(std::vector<Property> requested) {
  if (std::find(requested.begin(), requested.end(), Property::kTheorem) != requested.end()) {
    requested.push_back(Property::kTheoremClassRestricted);
  }
  std::vector<Property> out;
  for (Property p : kAllProperties) {
    if (std::find(requested.begin(), requested.end(), p) != requested.end()) out.push_back(p);
  }
  return out;
}

using Tallies = std::vector<std::pair<Property, PropertyTally>>;

inline void evaluate_graph(const Graph& g, Tallies& tallies) {
  GraphFacts facts(g);
  for (auto& [p, tally] : tallies) {
    switch (check_property(p, facts)) {
      case Verdict::kOutOfClass: break;
      case Verdict::kSkipped: ++tally.skipped; break;
      case Verdict::kPass:
        ++tally.in_class;
        ++tally.passes;
        break;
      case Verdict::kUnconfirmed:
        ++tally.in_class;
        ++tally.unconfirmed;
        break;
      case Verdict::kFail: {
        ++tally.in_class;
        ++tally.failures;
        Counterexample found{p, g.order(), facts.graph6()};
        if (!tally.first_counterexample || found < *tally.first_counterexample) {
          tally.first_counterexample = std::move(found);
        }
        break;
      }
    }
  }
}

// Runs evaluate_graph over indices [0, count) on `jobs` threads. `make_graph`
// maps an index to its graph and must be safe to call concurrently.
template <typename MakeGraph>
Tallies sweep_indices(std::uint64_t count, const std::vector<Property>& properties, unsigned jobs,
                      const MakeGraph& make_graph) {
  Tallies blank;
  for (Property p : properties) blank.emplace_back(p, PropertyTally{});

  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> next{0};
  auto work = [&](Tallies& local) {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= count) return;
      const std::uint64_t end = std::min(count, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) evaluate_graph(make_graph(i), local);
    }
  };

  const unsigned workers = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, (count + kChunk - 1) / kChunk)));
  std::vector<Tallies> partial(workers, blank);
  if (workers == 1) {
    work(partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { work(partial[w]); });
  }
  Tallies total = blank;
  for (const Tallies& part : partial) {
    for (std::size_t k = 0; k < total.size(); ++k) total[k].second.merge(part[k].second);
  }
  return total;
}

inline SweepReport finish_report(const SweepConfig& cfg, std::uint64_t population, Tallies tallies,
                                 std::chrono::steady_clock::time_point started) {
  SweepReport report;
  report.config = cfg;
  report.population = population;
  report.tallies = std::move(tallies);
  for (const auto& [p, t] : report.tallies) {
    if (t.first_counterexample &&
        (!report.first_counterexample || *t.first_counterexample < *report.first_counterexample)) {
      report.first_counterexample = t.first_counterexample;
    }
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace detail

/// Sweeps the exhaustive or random population described by `cfg`.
inline SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  const auto properties = detail::expand_properties(cfg.properties);

  if (cfg.mode == SweepConfig::Mode::kExhaustive) {
    // offsets[n] is the global index of the first graph of order n.
    std::vector<std::uint64_t> offsets{0};
    for (std::size_t n = 0; n <= cfg.max_n; ++n) {
      offsets.push_back(offsets.back() + (std::uint64_t{1} << pair_count(n)));
    }
    const std::uint64_t total = offsets.back();
    auto make = [&offsets](std::uint64_t i) {
      const auto it = std::upper_bound(offsets.begin(), offsets.end(), i);
      const auto n = static_cast<std::size_t>(it - offsets.begin() - 1);
      return labeled_graph(n, i - offsets[n]);
    };
    return detail::finish_report(cfg, total, detail::sweep_indices(total, properties, cfg.jobs, make),
                                 started);
  }
  if (cfg.mode == SweepConfig::Mode::kRandom) {
    auto make = [&cfg](std::uint64_t i) {
      return random_graph(cfg.max_n, *cfg.edge_probability, sample_seed(cfg.seed, i));
    };
    return detail::finish_report(
        cfg, cfg.sample_count,
        detail::sweep_indices(cfg.sample_count, properties, cfg.jobs, make), started);
  }
  throw PreconditionError("sweep: ingest mode needs an explicit population");
}

/// Sweeps an explicit population (typically read with ingest_graph6_stream).
inline SweepReport run_sweep(const SweepConfig& cfg, std::span<const Graph> population) {
  cfg.validate();
  if (cfg.mode != SweepConfig::Mode::kIngest) {
    throw PreconditionError("sweep: an explicit population requires ingest mode");
  }
  const auto started = std::chrono::steady_clock::now();
  const auto properties = detail::expand_properties(cfg.properties);
  auto make = [population](std::uint64_t i) -> const Graph& { return population[i]; };
  return detail::finish_report(
      cfg, population.size(),
      detail::sweep_indices(population.size(), properties, cfg.jobs, make), started);
}

}  // namespace mcover
