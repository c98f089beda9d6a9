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

// Command implementations behind tools/mcover. Each command returns a
// CommandOutcome instead of writing to the process streams, so tests can
// drive them directly.
//
// Exit codes: 0 success, 1 a mathematical refutation was found, 2 usage,
// input or internal error.

#pragma once

#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mcover/cover.hpp"
#include "mcover/errors.hpp"
#include "mcover/graph.hpp"
#include "mcover/graph_io.hpp"
#include "mcover/json.hpp"
#include "mcover/matching.hpp"
#include "mcover/sweep.hpp"

namespace mcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitError = 2;

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string payload;      // stdout
  std::string diagnostics;  // stderr
};

/// Where a command reads its graph: --graph6, --edges, or else stdin (an edge
/// list when the first non-blank character is a digit, graph6 otherwise).
struct GraphSource {
  std::optional<std::string> graph6;
  std::optional<std::string> edges_path;
};

struct OutputOptions {
  std::optional<std::string> dot_path;
  bool json = true;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Graph load_graph(const GraphSource& source, std::istream& stdin_stream) {
  if (source.graph6 && source.edges_path) {
    throw PreconditionError("give either --graph6 or --edges, not both");
  }
  if (source.graph6) return parse_graph6(*source.graph6);
  if (source.edges_path) return parse_edge_list(read_file(*source.edges_path));
  const std::string text{std::istreambuf_iterator<char>(stdin_stream),
                         std::istreambuf_iterator<char>()};
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("stdin: no graph given", 0, ParseError::Unit::kByte);
  if (std::isdigit(static_cast<unsigned char>(text[first]))) return parse_edge_list(text);
  const auto eol = text.find('\n', first);
  return parse_graph6(std::string_view(text).substr(first, eol == std::string::npos ? eol : eol - first));
}

namespace detail {

inline void write_dot(const OutputOptions& out, const Graph& g, std::span<const Edge> highlight) {
  if (!out.dot_path) return;
  std::ofstream file(*out.dot_path);
  if (!file) throw PreconditionError("cannot write " + *out.dot_path);
  file << to_dot(g, highlight);
}

// "key: value" lines for --no-json.
inline std::string render_text(const json::Json& doc) {
  std::string out;
  for (const auto& [key, value] : doc.items()) {
    if (key == "kind" || key == "schema_version") continue;
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return out;
}

inline std::string render(const json::Json& doc, const OutputOptions& out) {
  return out.json ? doc.dump(2) + "\n" : render_text(doc);
}

template <typename Body>
CommandOutcome guarded(Body&& body) {
  try {
    return body();
  } catch (const Refutation& r) {
    return {kExitRefuted, json::refutation_document(r).dump(2) + "\n",
            std::string("refutation: ") + r.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitError, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace detail

/// Cover report; --dot highlights the disallowed edges.
inline CommandOutcome cmd_analyze(const GraphSource& source, const OutputOptions& out,
                                  std::istream& in) {
  return detail::guarded([&] {
    const Graph g = load_graph(source, in);
    const CoverReport r = analyze(g);
    detail::write_dot(out, g, r.disallowed);
    return CommandOutcome{kExitOk, detail::render(json::analyze_document(g, r), out), ""};
  });
}

/// C(G); --dot draws the input with the removed edges highlighted.
inline CommandOutcome cmd_core(const GraphSource& source, const OutputOptions& out,
                               std::istream& in) {
  return detail::guarded([&] {
    const Graph g = load_graph(source, in);
    const Graph core = core_subgraph(g);
    const json::Json doc = json::core_document(g, core);
    std::vector<Edge> removed;
    for (const auto& e : doc["removed"]) removed.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    detail::write_dot(out, g, removed);
    return CommandOutcome{kExitOk, detail::render(doc, out), ""};
  });
}

inline CommandOutcome cmd_minimize(const GraphSource& source, const OutputOptions& out,
                                   std::istream& in) {
  return detail::guarded([&] {
    const Graph g = load_graph(source, in);
    const Minimized m = minimize(g);
    detail::write_dot(out, m.graph, {});
    return CommandOutcome{kExitOk, detail::render(json::minimize_document(g, m), out), ""};
  });
}

/// --dot highlights the witness pair.
inline CommandOutcome cmd_witness(const GraphSource& source, const OutputOptions& out,
                                  std::istream& in) {
  return detail::guarded([&] {
    const Graph g = load_graph(source, in);
    const WitnessSequence w = theorem_witness_sequence(g);
    const Edge pair[] = {w.first, w.second};
    detail::write_dot(out, g, pair);
    return CommandOutcome{kExitOk, detail::render(json::witness_document(g, w), out), ""};
  });
}

struct SweepOptions {
  bool exhaustive = false;
  bool random = false;
  std::optional<std::string> ingest_path;  // "-" reads stdin
  std::size_t max_n = 6;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  std::string properties = "theorem,lemma1,lemma2,corollary";
  unsigned jobs = 0;  // 0: one per hardware thread
  bool timing = false;
  bool skip_malformed = false;
};

inline std::vector<Property> parse_property_list(std::string_view csv) {
  std::vector<Property> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    const auto name = csv.substr(pos, comma - pos);
    if (!name.empty()) {
      const Property p = parse_property(name);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    pos = comma + 1;
  }
  return out;
}

/// Exit 1 iff some property has a confirmed failure; exit 2 when the fast
/// path and the enumeration oracle disagree.
inline CommandOutcome cmd_sweep(const SweepOptions& opts, const OutputOptions& out,
                                std::istream& in) {
  return detail::guarded([&] {
    const int modes = int(opts.exhaustive) + int(opts.random) + int(opts.ingest_path.has_value());
    if (modes != 1) throw PreconditionError("choose exactly one of --exhaustive, --random, --ingest");

    SweepConfig cfg;
    cfg.properties = parse_property_list(opts.properties);
    cfg.jobs = opts.jobs != 0 ? opts.jobs : std::max(1U, std::thread::hardware_concurrency());

    SweepReport report;
    std::string source;
    if (opts.exhaustive) {
      cfg.mode = SweepConfig::Mode::kExhaustive;
      cfg.max_n = opts.max_n;
      report = run_sweep(cfg);
    } else if (opts.random) {
      if (!opts.n || !opts.p || !opts.samples) {
        throw PreconditionError("--random needs --n, --p and --samples");
      }
      cfg.mode = SweepConfig::Mode::kRandom;
      cfg.max_n = *opts.n;
      cfg.edge_probability = opts.p;
      cfg.sample_count = *opts.samples;
      cfg.seed = opts.seed;
      report = run_sweep(cfg);
    } else {
      cfg.mode = SweepConfig::Mode::kIngest;
      source = *opts.ingest_path;
      std::ifstream file;
      std::istream* stream = &in;
      if (source != "-") {
        file.open(source);
        if (!file) throw PreconditionError("cannot open " + source);
        stream = &file;
      }
      const auto policy = opts.skip_malformed ? Graph6Stream::Policy::kSkip : Graph6Stream::Policy::kStrict;
      Graph6Stream graphs(*stream, policy);
      std::vector<Graph> population;
      while (auto record = graphs.next()) population.push_back(std::move(record->graph));
      report = run_sweep(cfg, population);
    }

    CommandOutcome outcome{kExitOk, detail::render(json::sweep_document(report, opts.timing, source), out), ""};
    if (!opts.timing) {
      outcome.diagnostics = "swept " + std::to_string(report.population) + " graphs in " +
                            std::to_string(report.wall_time_seconds) + " s\n";
    }
    if (report.total_unconfirmed() > 0) {
      outcome.exit_code = kExitError;
      outcome.diagnostics += "error: fast path and enumeration oracle disagree on " +
                             std::to_string(report.total_unconfirmed()) + " graph(s)\n";
    } else if (report.total_failures() > 0) {
      outcome.exit_code = kExitRefuted;
      outcome.diagnostics += "refutation: first counterexample " +
                             report.first_counterexample->graph6 + " (" +
                             std::string(property_name(report.first_counterexample->property)) + ")\n";
    }
    return outcome;
  });
}

}  // namespace mcover::cli
