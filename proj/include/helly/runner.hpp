#pragma once

#include "helly/decide.hpp"
#include "helly/errors.hpp"
#include "helly/graph.hpp"
#include "helly/json_io.hpp"
#include "helly/word_metric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace helly {

// Shared driver behind the command line and the acceptance suite.
// Every run produces a JSON report with a fixed field order plus a
// process exit code; identical input text yields byte-identical
// reports apart from the trailing timing_ms field, across runs and
// across worker counts.

struct RunnerOptions {
  DecideOptions decide;
  std::int64_t bfs_budget = kDefaultBfsBudget;
  std::int64_t k_max = 32;
  int graph_vertex_cap = kDefaultHellyVertexCap;
  int grid_vertex_cap = 4096;
  std::vector<VecZ> extra_directions; // appended to the spec's directions
  std::string csv_path;               // per-direction samples, empty = skip
};

struct RunOutcome {
  Json report;
  int exit_code = 0;
};

// Exit codes: 0 success/Helly/solved, 3 negative verdict (NotHelly,
// no solution), 2 invalid input, 4 budget or cap exceeded, 1
// internal inconsistency.
int exit_code_for_error(ErrorKind kind);
const char* error_kind_name(ErrorKind kind);

// FNV-1a 64 over the raw input bytes, rendered "fnv1a64:<16 hex>".
std::string input_digest(const std::string& text);

// Report minus the timing field, for byte-level comparisons.
Json strip_timing(Json report);

// Crystal spec -> point group -> order precheck -> full decision;
// positive verdicts carry the certificate, the conjugated affine
// action and the rescaled cube-tiling action.
RunOutcome run_decide(const std::string& input_text, const RunnerOptions& opts = {});

// Word metric spec -> directional limit brackets; abelian specs also
// get the exact limit-norm polytope and optional isometry checks.
RunOutcome run_stablenorm(const std::string& input_text, const RunnerOptions& opts = {});

// Graph JSON or a builtin name (K5, C4, P6, S3, Q3, grid2x3).
RunOutcome run_helly_graph(const std::string& input_text, const RunnerOptions& opts = {});

RunOutcome run_scaled_helly(const std::string& input_text, const RunnerOptions& opts = {});

RunOutcome run_pushout(const std::string& input_text, const RunnerOptions& opts = {});

// Lie algebra JSON or the builtin name "heisenberg".
RunOutcome run_lie(const std::string& input_text, const RunnerOptions& opts = {});

// Re-checks a previously produced report from its own content alone:
// conjugation certificates, obstruction witnesses, ball families,
// scaled radii, pushout diagrams, series dimensions, sample
// arithmetic. Exit 0 when every check passes, 2 otherwise.
RunOutcome run_verify(const std::string& report_text, const RunnerOptions& opts = {});

} // namespace helly
