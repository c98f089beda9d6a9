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

// JSON documents emitted by the command-line tool. Every document carries
// "kind" and "schema_version" and is described by schemas/report.json. Keys
// are emitted in a fixed order so output is byte-stable.

#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcover/cover.hpp"
#include "mcover/graph.hpp"
#include "mcover/graph_io.hpp"
#include "mcover/matching.hpp"
#include "mcover/sweep.hpp"

namespace mcover::json {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json document(const char* kind) {
  Json doc;
  doc["kind"] = kind;
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

inline Json edge(const Edge& e) { return Json::array({e.u(), e.v()}); }

inline Json edges(std::span<const Edge> list) {
  Json out = Json::array();
  for (const Edge& e : list) out.push_back(edge(e));
  return out;
}

inline Json vertices(std::span<const Vertex> list) {
  Json out = Json::array();
  for (Vertex w : list) out.push_back(w);
  return out;
}

inline Json graph6_or_null(const Graph& g) {
  if (g.order() > kMaxGraph6Order) return nullptr;
  return to_graph6(g);
}

inline Json analyze_document(const Graph& g, const CoverReport& r) {
  Json doc = document("analyze");
  doc["graph6"] = graph6_or_null(g);
  doc["n"] = g.order();
  doc["nu"] = r.nu;
  doc["allowed"] = edges(r.allowed);
  doc["disallowed"] = edges(r.disallowed);
  doc["matching_covered"] = r.is_matching_covered;
  doc["minimal_matching_covered"] = r.is_minimal_matching_covered;
  doc["perfect_matching"] = r.has_perfect_matching;
  doc["conventions"] = {
      {"edgeless_graph_is_matching_covered", true},
      {"minimality_test_keeps_isolated_vertices", true},
      {"minimize_drops_isolated_vertices", true},
  };
  return doc;
}

inline Json core_document(const Graph& g, const Graph& core) {
  std::vector<Edge> removed;
  for (const Edge& e : g.edges()) {
    if (!core.has_edge(e)) removed.push_back(e);
  }
  Json doc = document("core");
  doc["input_graph6"] = graph6_or_null(g);
  doc["graph6"] = graph6_or_null(core);
  doc["n"] = core.order();
  doc["edges"] = edges(core.edges());
  doc["removed"] = edges(removed);
  return doc;
}

inline Json minimize_document(const Graph& input, const Minimized& m) {
  Json doc = document("minimize");
  doc["input_graph6"] = graph6_or_null(input);
  doc["graph6"] = graph6_or_null(m.graph);
  doc["n"] = m.graph.order();
  doc["edges"] = edges(m.graph.edges());
  doc["dropped_initially"] = vertices(m.dropped_initially);
  Json trace = Json::array();
  for (const MinimizeStep& step : m.trace) {
    trace.push_back({{"deleted", edge(step.deleted)},
                     {"dropped_isolated", !step.dropped.empty()},
                     {"dropped", vertices(step.dropped)}});
  }
  doc["trace"] = std::move(trace);
  return doc;
}

inline Json witness_document(const Graph& g, const WitnessSequence& w) {
  Json doc = document("witness");
  doc["graph6"] = graph6_or_null(g);
  doc["sequence"] = edges(w.edges);
  doc["repeat"] = {{"i", w.repeat_i}, {"j", w.repeat_j}};
  doc["pair"] = Json::array({edge(w.first), edge(w.second)});
  Json shared = Json::array();
  for (const Matching& f : w.shared) shared.push_back(edges(f.edges()));
  doc["shared"] = std::move(shared);
  return doc;
}

inline Json refutation_document(const Refutation& r) {
  Json doc = document("refutation");
  doc["property"] = r.property();
  doc["graph6"] = r.graph6();
  doc["message"] = r.what();
  return doc;
}

inline Json counterexample(const std::optional<Counterexample>& c) {
  if (!c) return nullptr;
  return {{"property", property_name(c->property)}, {"n", c->order}, {"graph6", c->graph6}};
}

/// Wall time is left out unless asked for, so that reports of the same sweep
/// are byte-identical.
inline Json sweep_document(const SweepReport& r, bool include_timing = false,
                           const std::string& source = {}) {
  const SweepConfig& cfg = r.config;
  Json config;
  Json properties = Json::array();
  for (Property p : cfg.properties) properties.push_back(property_name(p));
  switch (cfg.mode) {
    case SweepConfig::Mode::kExhaustive:
      config = {{"mode", "exhaustive"}, {"max_n", cfg.max_n}};
      break;
    case SweepConfig::Mode::kRandom:
      config = {{"mode", "random"},
                {"n", cfg.max_n},
                {"p", *cfg.edge_probability},
                {"samples", cfg.sample_count},
                {"seed", cfg.seed}};
      break;
    case SweepConfig::Mode::kIngest:
      config = {{"mode", "ingest"}, {"source", source}};
      break;
  }
  config["properties"] = std::move(properties);

  Json doc = document("sweep");
  doc["config"] = std::move(config);
  doc["population"] = r.population;
  Json tallies = Json::object();
  for (const auto& [p, t] : r.tallies) {
    tallies[std::string(property_name(p))] = {
        {"in_class", t.in_class},
        {"passes", t.passes},
        {"failures", t.failures},
        {"unconfirmed", t.unconfirmed},
        {"skipped", t.skipped},
        {"first_counterexample", counterexample(t.first_counterexample)},
    };
  }
  doc["properties"] = std::move(tallies);
  doc["failures"] = r.total_failures();
  doc["first_counterexample"] = counterexample(r.first_counterexample);
  if (include_timing) doc["wall_time_seconds"] = r.wall_time_seconds;
  return doc;
}

}  // namespace mcover::json
