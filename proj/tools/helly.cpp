// Command line front end: each subcommand reads one input (file,
// inline JSON, or builtin name), runs the shared driver, prints the
// JSON report to stdout and exits with the verdict code.

#include "helly/runner.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

// Inputs starting with '{' are inline JSON; anything naming a
// readable file is read; the rest passes through as a builtin name.
// Builtin names never contain '/' or a ".json" suffix, so an
// unreadable path-looking argument is rejected here instead of
// falling through to the JSON parser.
std::string load_input(const std::string& arg) {
  if (!arg.empty() && arg[0] == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) {
    bool path_like = arg.find('/') != std::string::npos ||
                     (arg.size() > 5 && arg.rfind(".json") == arg.size() - 5);
    if (path_like) {
      std::cerr << "cannot read input file '" << arg << "'\n";
      std::exit(2);
    }
    return arg;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const helly::RunOutcome& outcome, const std::string& json_out) {
  std::string text = outcome.report.dump(2);
  text.push_back('\n');
  std::cout << text;
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to '" << json_out << "'\n";
      return 2;
    }
    out << text;
  }
  return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for Helly-style geometry of virtually abelian groups"};
  app.require_subcommand(1);

  helly::RunnerOptions opts;
  std::string input;
  std::string json_out;
  std::vector<std::string> direction_args;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input file, inline JSON, or builtin name")->required();
    cmd->add_option("--json-out", json_out, "also write the report to this path");
    cmd->add_option("--max-group-size", opts.decide.max_group_size, "point group closure cap");
    cmd->add_option("--max-dim", opts.decide.max_dim, "signed permutation dimension cap");
    cmd->add_option("--workers", opts.decide.workers, "threads for the assignment search");
    cmd->add_option("--seed", opts.decide.seed, "seed for the random conjugator probes");
    cmd->add_option("--bfs-budget", opts.bfs_budget, "lattice search state cap");
  };

  CLI::App* decide = app.add_subcommand("decide", "decide whether a crystal group is Helly");
  add_common(decide);

  CLI::App* stablenorm = app.add_subcommand("stablenorm", "directional limits of a lattice word metric");
  add_common(stablenorm);
  stablenorm->add_option("--k-max", opts.k_max, "largest sample multiple");
  stablenorm->add_option("--direction", direction_args,
                         "extra direction as comma-separated integers (repeatable)");
  stablenorm->add_option("--csv", opts.csv_path, "write (direction, k, distance) samples as CSV");

  CLI::App* graph = app.add_subcommand("helly-graph", "test a finite graph for the Helly property");
  add_common(graph);
  graph->add_option("--max-vertices", opts.graph_vertex_cap, "ball enumeration vertex cap");

  CLI::App* scaled = app.add_subcommand("scaled-helly", "solve a scaled-radius ball family");
  add_common(scaled);

  CLI::App* pushout = app.add_subcommand("pushout", "push a finite extension out along a kernel map");
  add_common(pushout);

  CLI::App* lie = app.add_subcommand("lie", "series and graded data of a rational Lie algebra");
  add_common(lie);

  CLI::App* verify = app.add_subcommand("verify", "re-check the certificates inside a report");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the input-error exit code; --help stays 0.
    return app.exit(e) == 0 ? 0 : 2;
  }

  for (const std::string& arg : direction_args) {
    helly::VecZ direction;
    std::stringstream parts(arg);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      try {
        direction.push_back(std::stoll(piece));
      } catch (const std::exception&) {
        std::cerr << "bad --direction '" << arg << "': expected comma-separated integers\n";
        return 2;
      }
    }
    if (direction.empty()) {
      std::cerr << "bad --direction '" << arg << "': empty\n";
      return 2;
    }
    opts.extra_directions.push_back(std::move(direction));
  }

  const std::string text = load_input(input);
  helly::RunOutcome outcome;
  if (decide->parsed()) outcome = helly::run_decide(text, opts);
  else if (stablenorm->parsed()) outcome = helly::run_stablenorm(text, opts);
  else if (graph->parsed()) outcome = helly::run_helly_graph(text, opts);
  else if (scaled->parsed()) outcome = helly::run_scaled_helly(text, opts);
  else if (pushout->parsed()) outcome = helly::run_pushout(text, opts);
  else if (lie->parsed()) outcome = helly::run_lie(text, opts);
  else outcome = helly::run_verify(text, opts);
  return emit(outcome, json_out);
}
