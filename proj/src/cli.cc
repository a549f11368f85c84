// Copyright 2026 The Gasket Walk Authors
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

#include "gasket/cli.h"

#include <CLI11.hpp>

#include <optional>
#include <string>
#include <thread>

#include "gasket/coupling.h"
#include "gasket/exact.h"
#include "gasket/io.h"
#include "gasket/measures.h"
#include "gasket/walk.h"

namespace gasket {
namespace {

// A flag value that parsed but makes no sense.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& what)
      : std::runtime_error(flag + ": " + what) {}
};

template <typename F>
auto checked(const std::string& flag, F&& parse) {
  try {
    return parse();
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag, e.what());
  }
}

struct Common {
  int d = 1;
  std::size_t level = 1;
  std::string out;
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_atomically(path, content);
  }
}

CLI::Option* add_d(CLI::App* app, int& d) {
  return app->add_option("--d", d, "Dimension of the gasket")
      ->required()
      ->check(CLI::Range(1, 254));
}

CLI::Option* add_level(CLI::App* app, std::size_t& level, bool required = true) {
  auto* opt = app->add_option("--level", level, "Word length N")->check(CLI::PositiveNumber);
  if (required) opt->required();
  return opt;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random walks on the Sierpinski graph and their hitting distributions",
               "gasket-walk"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  // graph export / graph-export
  Common graph;
  auto* graph_cmd = app.add_subcommand("graph", "Graph utilities");
  graph_cmd->require_subcommand(1);
  auto* graph_export = graph_cmd->add_subcommand("export", "Edge list of the level <= N graph");
  auto* graph_export_alias = app.add_subcommand("graph-export", "Same as 'graph export'");
  for (CLI::App* cmd : {graph_export, graph_export_alias}) {
    add_d(cmd, graph.d);
    add_level(cmd, graph.level);
    cmd->add_option("--out", graph.out, "Output CSV (default stdout)");
  }

  // simulate
  Common sim;
  std::size_t burn = WalkOptions::kDefaultBurn;
  std::uint64_t walks = 0, seed = 0, step_cap = WalkOptions{}.step_cap;
  std::string start = "-";
  unsigned threads = 0;
  auto* simulate = app.add_subcommand("simulate", "Histogram of limit-cell estimates");
  add_d(simulate, sim.d);
  add_level(simulate, sim.level);
  simulate->add_option("--burn", burn, "Extra levels walked past N")->capture_default_str();
  simulate->add_option("--walks", walks, "Number of walks")->required()->check(
      CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "Master seed")->capture_default_str();
  simulate->add_option("--start", start, "Start word, - for the root")->capture_default_str();
  simulate->add_option("--out", sim.out, "Output CSV (default stdout)");
  simulate->add_option("--threads", threads, "Worker threads, 0 for all cores");
  simulate->add_option("--step-cap", step_cap, "Abort a walk after this many steps")
      ->capture_default_str();

  // exit-dist
  Common exit;
  bool exact = false;
  std::size_t max_states = SolverBudget{}.max_exact_states;
  std::string exit_start = "-";
  auto* exit_cmd = app.add_subcommand("exit-dist", "Law of the walk at its first visit to level N");
  add_d(exit_cmd, exit.d);
  add_level(exit_cmd, exit.level);
  exit_cmd->add_option("--start", exit_start, "Start word, - for the root")
      ->capture_default_str();
  exit_cmd->add_flag("--exact", exact, "Exact rational solve");
  exit_cmd->add_option("--max-states", max_states, "State budget of the exact solver")
      ->capture_default_str();
  exit_cmd->add_option("--out", exit.out, "Output CSV (default stdout)");

  // coupling
  int coupling_d = 1;
  std::string path_text, coupling_out;
  bool random_path = false;
  std::size_t steps = 0;
  std::uint64_t coupling_seed = 0;
  auto* coupling = app.add_subcommand("coupling", "Reflection coupling trace of a walk path");
  add_d(coupling, coupling_d);
  auto* path_opt = coupling->add_option("--path", path_text, "Comma-separated walk path");
  auto* random_opt = coupling->add_flag("--random", random_path, "Trace a simulated path");
  coupling->add_option("--steps", steps, "Steps of the simulated path")->needs(random_opt);
  coupling->add_option("--seed", coupling_seed, "Seed of the simulated path")->needs(random_opt);
  coupling->add_option("--out", coupling_out, "Output JSON (default stdout)");
  path_opt->excludes(random_opt);

  // green
  int green_d = 1;
  std::size_t radius = 1;
  std::size_t green_states = SolverBudget{}.max_exact_states;
  std::string green_out;
  auto* green = app.add_subcommand("green", "Green function of the walk killed at level R");
  add_d(green, green_d);
  green->add_option("--radius", radius, "Killing level R")->required()->check(CLI::PositiveNumber);
  green->add_option("--max-states", green_states, "State budget of the exact solver")
      ->capture_default_str();
  green->add_option("--out", green_out, "Output CSV (default stdout)");

  // verify
  Common ver;
  std::string identity, json_path, verify_start = "0";
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Check an identity of the hitting distribution");
  verify->add_option("--identity", identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"group", "selfsimilar", "shift"}));
  add_d(verify, ver.d);
  add_level(verify, vopt.level);
  verify->add_option("--walks", vopt.walks, "Walks per sample")->required()->check(
      CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "Master seed")->capture_default_str();
  verify->add_option("--burn", vopt.burn, "Extra levels walked past N")->capture_default_str();
  verify->add_option("--threads", vopt.threads, "Worker threads, 0 for all cores");
  verify->add_option("--sets", vopt.sets, "Number of compared cell sets")->capture_default_str();
  verify->add_option("--start", verify_start, "Start x in 0X for the shift identity")
      ->capture_default_str();
  verify->add_option("--json", json_path, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    out << version_string() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*graph_export || *graph_export_alias) {
      const GasketConfig cfg(graph.d);
      emit(graph.out, graph_csv(graph.level, cfg), out);
      return kExitOk;
    }

    if (*simulate) {
      const GasketConfig cfg(sim.d);
      SimulationSpec spec;
      spec.start = checked("--start", [&] { return parse_word(start, cfg); });
      spec.level = sim.level;
      spec.burn = burn;
      spec.walks = walks;
      spec.master_seed = seed;
      spec.threads = threads;
      spec.options.step_cap = step_cap;
      if (spec.start.size() > spec.level + spec.burn) {
        throw UsageError("--start", "start word is deeper than level + burn");
      }
      emit(sim.out, histogram_csv(simulate_limit_cells(spec, cfg)), out);
      return kExitOk;
    }

    if (*exit_cmd) {
      const GasketConfig cfg(exit.d);
      const Word s = checked("--start", [&] { return parse_word(exit_start, cfg); });
      if (s.size() >= exit.level) throw UsageError("--start", "start must be shorter than --level");
      SolverBudget budget;
      budget.max_exact_states = max_states;
      const std::string csv = exact ? exit_csv(exit_distribution(s, exit.level, cfg, budget), cfg)
                                    : exit_csv(exit_distribution_approx(s, exit.level, cfg), cfg);
      emit(exit.out, csv, out);
      return kExitOk;
    }

    if (*coupling) {
      const GasketConfig cfg(coupling_d);
      WalkPath path;
      if (random_path) {
        RandomStream rng(RngSpec{coupling_seed, 0});
        path.d = coupling_d;
        path.seed = coupling_seed;
        path.steps.push_back(Word::root());
        for (std::size_t n = 0; n < steps; ++n) path.steps.push_back(step(path.steps.back(), rng, cfg));
      } else if (!path_text.empty()) {
        path = checked("--path", [&] { return parse_path(path_text, cfg); });
      } else {
        throw UsageError("--path", "either --path or --random is required");
      }
      const CouplingTrace trace = checked("--path", [&] { return fold(path, cfg); });
      emit(coupling_out, trace_json(trace).dump(2) + "\n", out);
      return kExitOk;
    }

    if (*green) {
      const GasketConfig cfg(green_d);
      SolverBudget budget;
      budget.max_exact_states = green_states;
      emit(green_out, green_csv(truncated_green(radius, cfg, budget)), out);
      return kExitOk;
    }

    if (*verify) {
      const GasketConfig cfg(ver.d);
      VerificationReport report;
      if (identity == "group") {
        report = verify_group_invariance(vopt, cfg);
      } else if (identity == "selfsimilar") {
        report = checked("--level", [&] { return verify_selfsimilar(vopt, cfg); });
      } else {
        const Word x = checked("--start", [&] { return parse_word(verify_start, cfg); });
        if (x.is_root() || x.front() != 0) {
          throw UsageError("--start", "shift identity needs a start beginning with 0");
        }
        report = verify_shift_identity(x, vopt, cfg);
      }
      emit(json_path, report_json(report).dump(2) + "\n", out);
      std::size_t failed = 0;
      for (const Comparison& c : report.comparisons) failed += !c.pass;
      for (const ExactCheck& c : report.exact_checks) failed += !c.pass;
      err << report.identity << ": " << report.exact_checks.size() << " exact checks, "
          << report.comparisons.size() << " comparisons, " << failed << " failed\n";
      return report.pass() ? kExitOk : kExitFailed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace gasket
