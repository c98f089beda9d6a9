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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mcover/cli.hpp"

namespace {

namespace cli = mcover::cli;

void add_output_options(CLI::App* cmd, cli::OutputOptions& out) {
  cmd->add_option("--dot", out.dot_path, "Also write a Graphviz DOT file");
  cmd->add_flag("--json,!--no-json", out.json, "JSON on stdout (default) or key: value lines");
}

void add_graph_options(CLI::App* cmd, cli::GraphSource& source, cli::OutputOptions& out) {
  cmd->add_option("--graph6", source.graph6, "Graph as a graph6 code (default: read stdin)");
  cmd->add_option("--edges", source.edges_path, "Edge-list file: 'n', then one 'u v' per line");
  add_output_options(cmd, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching covered graphs: analysis, minimisation, witnesses and sweeps"};
  app.require_subcommand(1);

  cli::GraphSource source;
  cli::OutputOptions out;
  cli::SweepOptions sweep;

  auto* analyze = app.add_subcommand("analyze", "Allowed edges, nu and the covered predicates");
  auto* core = app.add_subcommand("core", "The subgraph of allowed edges");
  auto* minimize = app.add_subcommand("minimize", "Delete edges while the graph stays matching covered");
  auto* witness = app.add_subcommand("witness", "Dominated-edge sequence of a minimal matching covered graph");
  for (auto* cmd : {analyze, core, minimize, witness}) add_graph_options(cmd, source, out);

  auto* sw = app.add_subcommand("sweep", "Falsification sweep over a graph population");
  sw->add_flag("--exhaustive", sweep.exhaustive, "All labelled graphs on 0..max-n vertices");
  sw->add_flag("--random", sweep.random, "Seeded G(n, p) samples");
  sw->add_option("--ingest", sweep.ingest_path, "graph6 stream, one code per line ('-' for stdin)");
  sw->add_option("--max-n", sweep.max_n, "Largest order in exhaustive mode (<= 8)")->capture_default_str();
  sw->add_option("--n", sweep.n, "Order of random graphs");
  sw->add_option("--p", sweep.p, "Edge probability of random graphs")->check(CLI::Range(0.0, 1.0));
  sw->add_option("--samples", sweep.samples, "Number of random graphs");
  sw->add_option("--seed", sweep.seed, "Random seed")->capture_default_str();
  sw->add_option("--properties", sweep.properties,
                 "Comma-separated subset of theorem,lemma1,lemma2,corollary,oracle-nu,oracle-allowed")
      ->capture_default_str();
  sw->add_option("--jobs", sweep.jobs, "Worker threads (default: available processors)");
  sw->add_flag("--timing", sweep.timing, "Include wall time in the report");
  sw->add_flag("--skip-malformed", sweep.skip_malformed, "Skip bad lines of an ingested stream");
  add_output_options(sw, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitError;
  }

  cli::CommandOutcome outcome;
  if (*analyze) outcome = cli::cmd_analyze(source, out, std::cin);
  else if (*core) outcome = cli::cmd_core(source, out, std::cin);
  else if (*minimize) outcome = cli::cmd_minimize(source, out, std::cin);
  else if (*witness) outcome = cli::cmd_witness(source, out, std::cin);
  else outcome = cli::cmd_sweep(sweep, out, std::cin);

  std::cout << outcome.payload;
  std::cerr << outcome.diagnostics;
  return outcome.exit_code;
}
