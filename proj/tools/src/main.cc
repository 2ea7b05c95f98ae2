// Copyright 2026 The Authors.
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

// Benchmark harness: generates instances, runs the algorithm suite over
// them, and exports trace/plot data.
//
// Exit codes: 0 success, 1 a run failed, 2 bad flags/config/input files.

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "blits/errors.hpp"
#include "blits/experiment.hpp"
#include "blits/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRunError = 1;
constexpr int kSpecError = 2;

// Every flag value funnels through the same key=value channel the config
// file uses, so flags and file entries cannot drift apart. Flags win
// because they are applied after the file.
class SpecFlags {
 public:
  void attach(CLI::App* cmd, const std::string& flag, const std::string& key,
              const std::string& help) {
    cmd->add_option_function<std::string>(
        flag,
        [this, key](const std::string& value) { overrides_[key] = value; },
        help);
  }

  void apply(blits::ExperimentSpec& spec) const {
    for (const auto& [key, value] : overrides_) {
      blits::apply_config_entry(spec, key, value);
    }
  }

 private:
  std::map<std::string, std::string> overrides_;
};

void attach_instance_flags(CLI::App* cmd, SpecFlags& flags) {
  flags.attach(cmd, "--model", "model",
               "instance source: er|sbm|ba|config|file");
  flags.attach(cmd, "--input", "input",
               "input path when model=file (edge list or CSV)");
  flags.attach(cmd, "--similarity-mode", "similarity_mode",
               "CSV interpretation: direct|inner|cosine");
  flags.attach(cmd, "--n", "n", "ground-set size for er/ba/config");
  flags.attach(cmd, "--p", "p", "edge probability (er, sbm in-cluster)");
  flags.attach(cmd, "--sbm-clusters", "sbm_clusters", "number of clusters");
  flags.attach(cmd, "--sbm-size-lo", "sbm_size_lo", "min cluster size");
  flags.attach(cmd, "--sbm-size-hi", "sbm_size_hi", "max cluster size");
  flags.attach(cmd, "--ba-m", "ba_m", "attachments per newcomer");
  flags.attach(cmd, "--cm-exponent", "cm_exponent",
               "power-law exponent for the configuration model");
  flags.attach(cmd, "--weighted", "weighted",
               "draw U(0,1) edge weights (true|false)");
  flags.attach(cmd, "--seed", "seed", "base seed");
}

int run_command(const std::string& config_path, const SpecFlags& flags) {
  blits::ExperimentSpec spec;
  if (!config_path.empty()) {
    for (const auto& [key, value] : blits::parse_config_file(config_path)) {
      blits::apply_config_entry(spec, key, value);
    }
  }
  flags.apply(spec);

  blits::ExperimentResult result = blits::run_experiment(spec);
  for (const blits::AlgorithmSummary& s : result.summaries) {
    std::cout << s.algorithm << ": mean_value=" << s.mean_value
              << " mean_rounds=" << s.mean_rounds
              << " mean_queries=" << s.mean_queries << " ok_runs=" << s.runs
              << "\n";
  }
  if (!spec.out_path.empty()) {
    std::cout << "trace written to " << spec.out_path << "\n";
  }
  if (result.had_error) {
    std::cerr << "error: at least one run failed; see #error trace records\n";
    return kRunError;
  }
  return kOk;
}

int generate_command(const SpecFlags& flags, const std::string& out_path) {
  blits::ExperimentSpec spec;
  flags.apply(spec);
  if (spec.model == "file") {
    throw blits::ParseError("generate: needs a generative model, not file");
  }
  spec.objective = "cut";  // any graph objective materializes the graph
  blits::InstanceBundle bundle = blits::build_instance(spec);
  blits::save_edge_list(out_path, bundle.graph);
  std::cout << "wrote " << bundle.graph.edges.size() << " edges over "
            << bundle.graph.n << " nodes to " << out_path << "\n";
  return kOk;
}

int plot_data_command(const std::string& input_path,
                      const std::string& out_path) {
  blits::TraceFile trace = blits::read_trace_file(input_path);
  std::vector<blits::PlotSeries> series = blits::emit_plot_data(trace);
  blits::write_plot_data(out_path, series);
  std::cout << "wrote " << series.size() << " series to " << out_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Low-adaptivity submodular maximization benchmark harness"};
  app.require_subcommand(1);

  // generate
  CLI::App* generate = app.add_subcommand(
      "generate", "generate a random graph and write it as an edge list");
  SpecFlags generate_flags;
  attach_instance_flags(generate, generate_flags);
  std::string generate_out;
  generate->add_option("--out", generate_out, "edge-list destination")
      ->required();

  // run
  CLI::App* run = app.add_subcommand(
      "run", "run an experiment and write its trace");
  SpecFlags run_flags;
  std::string config_path;
  run->add_option("--config", config_path,
                  "key=value experiment file (flags override it)");
  attach_instance_flags(run, run_flags);
  run_flags.attach(run, "--experiment-id", "experiment_id",
                   "id column value in the trace");
  run_flags.attach(run, "--objective", "objective",
                   "cut|revenue|modular|image|movie");
  run_flags.attach(run, "--algorithms", "algorithms",
                   "comma list: blits,blits_plus,greedy,random_greedy,random");
  run_flags.attach(run, "--k", "k", "cardinality constraint");
  run_flags.attach(run, "--r", "r", "outer iteration bound");
  run_flags.attach(run, "--epsilon", "epsilon", "accuracy parameter in (0,1)");
  run_flags.attach(run, "--samples", "samples", "samples per estimate");
  run_flags.attach(run, "--rho-cap", "rho_cap",
                   "max filter iterations per call (0 = default)");
  run_flags.attach(run, "--opt-guess", "opt_guess",
                   "singletons | fixed:V | grid:B:F:C | greedy:M");
  run_flags.attach(run, "--reps", "repetitions", "repetitions per algorithm");
  run_flags.attach(run, "--out", "out", "trace destination path");

  // plot-data
  CLI::App* plot = app.add_subcommand(
      "plot-data", "aggregate a trace into per-algorithm plot series");
  std::string plot_in, plot_out;
  plot->add_option("--input", plot_in, "trace CSV")->required();
  plot->add_option("--out", plot_out, "plot-data CSV destination")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kSpecError;
  }

  try {
    if (generate->parsed()) return generate_command(generate_flags, generate_out);
    if (run->parsed()) return run_command(config_path, run_flags);
    return plot_data_command(plot_in, plot_out);
  } catch (const blits::ParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kSpecError;
  } catch (const blits::InvalidInputError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kSpecError;
  } catch (const std::exception& e) {
    std::cerr << "run error: " << e.what() << "\n";
    return kRunError;
  }
}
