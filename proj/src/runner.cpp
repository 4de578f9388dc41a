#include "helly/runner.hpp"

#include "helly/errors.hpp"
#include "helly/extension.hpp"
#include "helly/lie.hpp"
#include "helly/norm_polytope.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

namespace helly {

namespace {

constexpr const char* kToolName = "helly";
constexpr const char* kToolVersion = "0.1.0";

std::string trimmed(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = text.find_last_not_of(" \t\r\n");
  return text.substr(a, b - a + 1);
}

// Body fills the payload and returns the exit code; errors become a
// tagged "error" object with the matching exit code. timing_ms is
// always the last field so reports stay comparable without it.
RunOutcome run_guarded(const char* command, const std::string& input_text,
                       const std::function<int(Json&)>& body) {
  auto started = std::chrono::steady_clock::now();
  RunOutcome outcome;
  outcome.report["tool"] = kToolName;
  outcome.report["version"] = kToolVersion;
  outcome.report["command"] = command;
  outcome.report["input_digest"] = input_digest(input_text);
  try {
    outcome.exit_code = body(outcome.report);
  } catch (const Error& e) {
    Json err;
    err["kind"] = error_kind_name(e.kind());
    err["message"] = e.what();
    outcome.report["error"] = std::move(err);
    outcome.exit_code = exit_code_for_error(e.kind());
  }
  auto elapsed = std::chrono::steady_clock::now() - started;
  outcome.report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return outcome;
}

std::vector<int> orders_present(const FiniteMatrixGroup& group) {
  std::set<int> seen(group.orders.begin(), group.orders.end());
  return std::vector<int>(seen.begin(), seen.end());
}

std::vector<VecZ> basis_directions(int dim) {
  std::vector<VecZ> out;
  for (int i = 0; i < dim; ++i) {
    VecZ e(dim, 0);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

void write_sample_csv(const std::string& path, const std::vector<DirectionalEstimate>& estimates) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidInput, "cannot open csv path '" + path + "'");
  out << "direction,k,distance\n";
  for (const DirectionalEstimate& e : estimates) {
    std::ostringstream dir;
    for (std::size_t i = 0; i < e.direction.size(); ++i) {
      if (i) dir << ';';
      dir << e.direction[i];
    }
    for (const DirectionalSample& s : e.samples)
      out << dir.str() << ',' << s.k << ',' << s.distance << '\n';
  }
}

// Builtin graph names: K5, C4, P6, S3 (star with 3 leaves), Q3
// (3-cube), grid2x3 (box {0..3}^2, checked by the distance method).
struct BuiltinGraph {
  bool is_grid = false;
  int grid_dim = 0;
  int grid_m = 0;
  FiniteGraph graph;
};

BuiltinGraph builtin_graph(const std::string& name) {
  BuiltinGraph out;
  auto size_from = [&](std::size_t offset) {
    std::size_t pos = offset;
    long value = 0;
    if (pos >= name.size()) fail(ErrorKind::InvalidInput, "unknown builtin graph '" + name + "'");
    for (; pos < name.size(); ++pos) {
      char c = name[pos];
      if (c < '0' || c > '9') fail(ErrorKind::InvalidInput, "unknown builtin graph '" + name + "'");
      value = value * 10 + (c - '0');
      if (value > 1000000) fail(ErrorKind::InvalidInput, "builtin graph size out of range");
    }
    return static_cast<int>(value);
  };
  if (name.rfind("grid", 0) == 0) {
    std::size_t x = name.find('x', 4);
    if (x == std::string::npos || x == 4 || x + 1 >= name.size())
      fail(ErrorKind::InvalidInput, "grid builtin: expected grid<dim>x<m>");
    out.is_grid = true;
    out.grid_dim = static_cast<int>(std::stol(name.substr(4, x - 4)));
    std::string tail = name.substr(x + 1);
    for (char c : tail)
      if (c < '0' || c > '9') fail(ErrorKind::InvalidInput, "grid builtin: expected grid<dim>x<m>");
    out.grid_m = static_cast<int>(std::stol(tail));
    return out;
  }
  if (name.empty()) fail(ErrorKind::InvalidInput, "empty graph name");
  switch (name[0]) {
    case 'K': out.graph = complete_graph(size_from(1)); return out;
    case 'C': out.graph = cycle_graph(size_from(1)); return out;
    case 'P': out.graph = path_graph(size_from(1)); return out;
    case 'S': out.graph = star_graph(size_from(1)); return out;
    case 'Q': out.graph = hypercube_graph(size_from(1)); return out;
    default: fail(ErrorKind::InvalidInput, "unknown builtin graph '" + name + "'");
  }
}

// ---- verify helpers ----------------------------------------------------

struct CheckList {
  Json checks = Json::array();
  bool all_ok = true;

  void run(const std::string& name, const std::function<void()>& fn) {
    Json entry;
    entry["name"] = name;
    try {
      fn();
      entry["ok"] = true;
    } catch (const std::exception& e) {
      entry["ok"] = false;
      entry["detail"] = e.what();
      all_ok = false;
    }
    checks.push_back(std::move(entry));
  }
};

void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::InvalidInput, message);
}

const Json& report_field(const Json& report, const char* name) {
  auto it = report.find(name);
  if (it == report.end())
    fail(ErrorKind::InvalidInput, std::string("report lacks field '") + name + "'");
  return *it;
}

void verify_decide_report(const Json& report, const RunnerOptions& opts, CheckList& checks) {
  CrystalSpec spec;
  checks.run("input_parses", [&] {
    spec = crystal_from_json(report_field(report, "input"));
    validate_crystal_spec(spec);
  });
  if (!checks.all_ok) return;

  PointGroup pg;
  checks.run("point_group_rebuilds", [&] {
    pg = point_group(spec, opts.decide.max_group_size);
    int reported = report_field(report_field(report, "point_group"), "order").get<int>();
    require(reported == pg.group.size(), "point group order changed on rebuild");
  });
  if (!checks.all_ok) return;

  std::string verdict = report_field(report, "verdict").get<std::string>();
  if (verdict == "Helly") {
    const Json& cert = report_field(report, "certificate");
    MatQ phi;
    MatQ phi_inv;
    checks.run("conjugator_invertible", [&] {
      phi = matq_from_json(report_field(cert, "phi"));
      phi_inv = mat_inverse(phi);
    });
    if (!checks.all_ok) return;
    checks.run("conjugates_are_signed_permutations", [&] {
      for (int k = 0; k < pg.group.size(); ++k) {
        MatQ image = phi * pg.group.elements[k] * phi_inv;
        require(is_signed_perm_matrix(image), "element " + std::to_string(k) +
                                                  " does not conjugate into a signed permutation");
      }
    });
    checks.run("hom_matches_conjugation", [&] {
      const Json& hom = report_field(cert, "hom");
      require(static_cast<int>(hom.size()) == pg.group.size(), "hom length != group order");
      std::set<std::vector<int>> images;
      for (const Json& entry : hom) {
        int k = report_field(entry, "element").get<int>();
        require(k >= 0 && k < pg.group.size(), "hom element index out of range");
        SignedPerm p = signed_perm_from_json(entry);
        MatQ image = phi * pg.group.elements[k] * phi_inv;
        require(image == signed_perm_matrix(p), "hom entry " + std::to_string(k) +
                                                    " disagrees with the conjugated matrix");
        std::vector<int> key = p.image;
        key.insert(key.end(), p.sign.begin(), p.sign.end());
        require(images.insert(key).second, "hom is not injective");
      }
    });
  } else if (verdict == "NotHelly") {
    const Json& obstruction = report_field(report, "obstruction");
    std::string kind = report_field(obstruction, "kind").get<std::string>();
    if (kind == "order") {
      checks.run("order_obstruction_recomputes", [&] {
        int index = report_field(obstruction, "element_index").get<int>();
        int order = report_field(obstruction, "element_order").get<int>();
        require(index >= 0 && index < pg.group.size(), "obstruction index out of range");
        require(pg.group.orders[index] == order, "element order changed on rebuild");
        std::vector<int> ambient = signed_perm_orders(pg.group.dim, opts.decide.max_dim);
        std::vector<int> reported;
        for (const Json& o : report_field(obstruction, "ambient_orders"))
          reported.push_back(o.get<int>());
        require(reported == ambient, "ambient order set changed on rebuild");
        require(!std::binary_search(ambient.begin(), ambient.end(), order),
                "claimed obstruction order is realizable");
      });
    } else if (kind == "character") {
      checks.run("character_obstruction_recomputes", [&] {
        std::vector<SignedPerm> targets = enumerate_signed_perms(pg.group.dim, opts.decide.max_dim);
        HomSearch search = find_hom_by_character(pg.group, targets, opts.decide.workers);
        require(!search.hom.has_value(), "a homomorphism exists after all");
        std::uint64_t reported = report_field(obstruction, "assignments_covered").get<std::uint64_t>();
        require(search.covered == reported, "covered assignment count changed on rebuild");
      });
    } else {
      checks.run("obstruction_kind_known", [&] { require(false, "unknown obstruction kind '" + kind + "'"); });
    }
  } else {
    checks.run("verdict_known", [&] { require(false, "unknown verdict '" + verdict + "'"); });
  }
}

void verify_helly_graph_report(const Json& report, const RunnerOptions& opts, CheckList& checks) {
  std::string method = report_field(report, "method").get<std::string>();
  std::string verdict = report_field(report, "verdict").get<std::string>();
  if (method == "distance_match") {
    checks.run("grid_distances_recheck", [&] {
      const Json& grid = report_field(report, "grid");
      GridBoxReport rebuilt = grid_box_helly(report_field(grid, "dim").get<int>(),
                                             report_field(grid, "m").get<int>(),
                                             opts.grid_vertex_cap);
      require(rebuilt.distances_match, "grid distances no longer match the max metric");
      require(verdict == "Helly", "distance-match reports must carry a Helly verdict");
    });
    return;
  }
  FiniteGraph graph;
  checks.run("graph_parses", [&] { graph = graph_from_json(report_field(report, "input")); });
  if (!checks.all_ok) return;
  if (verdict == "NotHelly") {
    checks.run("counterexample_family_verifies", [&] {
      BallFamily family = ball_family_from_json(report_field(report, "counterexample"));
      require(!family.balls.empty(), "empty counterexample family");
      for (const Ball& b : family.balls) {
        require(b.center >= 0 && b.center < graph.n, "ball center out of range");
        require(b.radius >= 0, "negative ball radius");
      }
      require(balls_pairwise_intersect(graph, family), "family is not pairwise intersecting");
      require(!solve_ball_family(graph, family).has_value(), "family has a common point");
    });
  } else {
    checks.run("helly_verdict_recomputes", [&] {
      HellyVerdict rebuilt = is_helly(graph, opts.graph_vertex_cap);
      require(rebuilt.helly, "graph is not Helly on recheck");
    });
  }
}

void verify_scaled_report(const Json& report, const RunnerOptions&, CheckList& checks) {
  ScaledHellyInstance instance;
  checks.run("instance_parses", [&] {
    instance = scaled_instance_from_json(report_field(report, "input"));
    validate_scaled_instance(instance);
  });
  if (!checks.all_ok) return;
  checks.run("scaled_radii_recompute", [&] {
    std::vector<std::int64_t> radii = scaled_radii(instance);
    std::vector<std::int64_t> reported;
    for (const Json& r : report_field(report, "radii_scaled")) reported.push_back(r.get<std::int64_t>());
    require(reported == radii, "integer radii changed on recompute");
  });
  bool solved = report_field(report, "solved").get<bool>();
  if (solved) {
    checks.run("solution_lies_in_every_ball", [&] {
      int x = report_field(report, "solution").get<int>();
      require(x >= 0 && x < instance.graph.n, "solution out of range");
      std::vector<std::int64_t> radii = scaled_radii(instance);
      Rational bound = rat(1, 2 * instance.j) + rat(1, instance.d);
      for (std::size_t i = 0; i < instance.centers.size(); ++i) {
        std::int64_t dist = instance.graph.dist[x][instance.centers[i]];
        require(dist >= 0 && dist <= radii[i], "solution misses ball " + std::to_string(i));
        Rational residual = rat(dist, instance.d) - instance.radii[i];
        require(residual <= bound, "residual exceeds the bound");
      }
    });
  } else {
    checks.run("no_solution_recomputes", [&] {
      ScaledHellyResult rebuilt = scaled_helly_check(instance);
      require(!rebuilt.solved, "a solution exists after all");
    });
  }
}

void verify_stablenorm_report(const Json& report, const RunnerOptions&, CheckList& checks) {
  checks.run("bracket_arithmetic_recomputes", [&] {
    for (const Json& je : report_field(report, "estimates")) {
      std::vector<std::pair<std::int64_t, std::int64_t>> samples;
      for (const Json& js : report_field(je, "samples"))
        samples.emplace_back(report_field(js, "k").get<std::int64_t>(),
                             report_field(js, "distance").get<std::int64_t>());
      require(!samples.empty(), "estimate without samples");
      Rational upper = rat(samples[0].second, samples[0].first);
      for (auto& [k, d] : samples) upper = std::min(upper, rat(d, k));
      Rational surrogate = rat(0);
      for (auto& [k, d] : samples) surrogate = std::max(surrogate, Rational(rat(d) - rat(k) * upper));
      Rational lower = rat(0);
      for (auto& [k, d] : samples) lower = std::max(lower, Rational((rat(d) - surrogate) / rat(k)));
      require(parse_rational(report_field(je, "upper").get<std::string>()) == upper,
              "upper bound disagrees with its samples");
      require(parse_rational(report_field(je, "lower").get<std::string>()) == lower,
              "lower bound disagrees with its samples");
      require(lower <= upper, "bracket inverted");
    }
  });
  if (report.contains("polytope")) {
    checks.run("polytope_extreme_and_symmetric", [&] {
      NormPolytope p = polytope_from_json(report["polytope"]);
      std::set<VecQ> vertex_set(p.vertices.begin(), p.vertices.end());
      for (const VecQ& v : p.vertices) {
        require(vertex_set.count(vec_scale(rat(-1), v)) == 1, "vertex set not centrally symmetric");
        std::vector<VecQ> others;
        for (const VecQ& w : p.vertices)
          if (w != v) others.push_back(w);
        require(!in_convex_hull(others, v), "reported vertex is not extreme");
      }
    });
  }
}

void verify_pushout_report(const Json& report, const RunnerOptions&, CheckList& checks) {
  PushoutInput input;
  checks.run("input_parses", [&] { input = pushout_input_from_json(report_field(report, "input")); });
  if (!checks.all_ok) return;
  checks.run("ses_morphism_verifies", [&] {
    PushoutResult result;
    result.extended = group_table_from_json(report_field(report, "extended"));
    result.quotient = group_table_from_json(report_field(report, "quotient"));
    const Json& maps = report_field(report, "maps");
    for (const Json& v : report_field(maps, "embed_m")) result.embed_m.push_back(v.get<int>());
    for (const Json& v : report_field(maps, "map_g")) result.map_g.push_back(v.get<int>());
    for (const Json& v : report_field(maps, "project_g")) result.project_g.push_back(v.get<int>());
    for (const Json& v : report_field(maps, "project_ext")) result.project_ext.push_back(v.get<int>());
    SesCheck check = verify_ses_morphism(input.g, input.n_subgroup, input.m, input.phi, result);
    require(check.ok, check.witness);
  });
}

void verify_lie_report(const Json& report, const RunnerOptions&, CheckList& checks) {
  LieAlgebra algebra;
  checks.run("structure_constants_validate", [&] {
    algebra = lie_from_json(report_field(report, "input"));
  });
  if (!checks.all_ok) return;
  checks.run("series_dimensions_recompute", [&] {
    NilpotencyReport rebuilt = is_nilpotent(algebra);
    std::vector<int> reported;
    for (const Json& d : report_field(report, "lower_central_series_dims"))
      reported.push_back(d.get<int>());
    require(reported == rebuilt.dims, "series dimensions changed on rebuild");
    require(report_field(report, "nilpotent").get<bool>() == rebuilt.nilpotent,
            "nilpotency verdict changed on rebuild");
  });
  if (report.contains("graded")) {
    checks.run("graded_bracket_recomputes", [&] {
      GradedAlgebra graded = associated_graded(algebra);
      const Json& jg = report["graded"];
      std::vector<int> weights;
      for (const Json& w : report_field(jg, "weights")) weights.push_back(w.get<int>());
      require(weights == graded.weight, "graded weights changed on rebuild");
      require(report_field(jg, "bracket_trivial").get<bool>() == graded.bracket_trivial,
              "graded bracket triviality changed on rebuild");
    });
  }
}

} // namespace

int exit_code_for_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidInput: return 2;
    case ErrorKind::GroupTooLarge:
    case ErrorKind::DimensionTooLarge:
    case ErrorKind::BudgetExceeded: return 4;
    case ErrorKind::Singular:
    case ErrorKind::Internal: return 1;
  }
  return 1;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::GroupTooLarge: return "group_too_large";
    case ErrorKind::DimensionTooLarge: return "dimension_too_large";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

std::string input_digest(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  for (int i = 15; i >= 0; --i) {
    buffer[i] = "0123456789abcdef"[hash & 0xf];
    hash >>= 4;
  }
  buffer[16] = '\0';
  return std::string("fnv1a64:") + buffer;
}

Json strip_timing(Json report) {
  report.erase("timing_ms");
  return report;
}

RunOutcome run_decide(const std::string& input_text, const RunnerOptions& opts) {
  return run_guarded("decide", input_text, [&](Json& report) {
    CrystalSpec spec = crystal_from_json(parse_json_text(input_text));
    validate_crystal_spec(spec);
    report["input"] = crystal_to_json(spec);

    PointGroup pg = point_group(spec, opts.decide.max_group_size);
    Json jpg;
    jpg["order"] = pg.group.size();
    jpg["orders_present"] = orders_present(pg.group);
    report["point_group"] = std::move(jpg);
    report["euclidean_form"] = gram_to_json(invariant_gram(pg));

    HellyDecision decision = decide_helly(pg, opts.decide);
    report["assignment_space"] = decision.assignment_space;
    report["precheck_passed"] = decision.precheck_passed;
    report["verdict"] = decision.helly ? "Helly" : "NotHelly";
    if (decision.helly) {
      report["certificate"] = certificate_to_json(*decision.certificate);
      std::vector<AffineIsometry> action = affine_linf_action(spec, decision.certificate->phi);
      Json jaction = Json::array();
      for (const AffineIsometry& map : action) jaction.push_back(affine_to_json(map));
      report["linf_action"] = Json{{"generators", std::move(jaction)}};
      try {
        TilingAction tiling = cubical_tiling_action(action, opts.decide.max_group_size);
        Json jtiling;
        jtiling["scale"] = rational_to_json(tiling.scale);
        Json jmaps = Json::array();
        for (const AffineIsometry& map : tiling.maps) jmaps.push_back(affine_to_json(map));
        jtiling["generators"] = std::move(jmaps);
        report["cubical_action"] = std::move(jtiling);
      } catch (const Error& e) {
        // Non-cocompact input: the verdict stands, only the tiling is
        // unavailable.
        if (e.kind() != ErrorKind::InvalidInput) throw;
        report["cubical_action"] = Json{{"skipped", e.what()}};
      }
      return 0;
    }
    report["obstruction"] = obstruction_to_json(*decision.obstruction);
    return 3;
  });
}

RunOutcome run_stablenorm(const std::string& input_text, const RunnerOptions& opts) {
  return run_guarded("stablenorm", input_text, [&](Json& report) {
    Json parsed = parse_json_text(input_text);
    WordMetricSpec spec = word_metric_from_json(parsed);
    validate_word_metric(spec);
    report["input"] = word_metric_to_json(spec);
    report["dim"] = spec.dim();

    std::vector<VecZ> directions;
    if (parsed.contains("directions"))
      for (const Json& d : parsed["directions"]) directions.push_back(vecz_from_json(d));
    for (const VecZ& d : opts.extra_directions) directions.push_back(d);
    if (directions.empty()) directions = basis_directions(spec.dim());
    for (const VecZ& d : directions)
      if (static_cast<int>(d.size()) != spec.dim())
        fail(ErrorKind::InvalidInput, "direction dimension mismatch");

    std::vector<DirectionalEstimate> estimates;
    Json jestimates = Json::array();
    for (const VecZ& d : directions) {
      estimates.push_back(directional_limit(spec, d, opts.k_max, opts.bfs_budget));
      jestimates.push_back(estimate_to_json(estimates.back()));
    }
    report["estimates"] = std::move(jestimates);

    if (spec.kind == WordMetricSpec::Kind::Abelian) {
      NormPolytope polytope = stable_norm_polytope(spec.abelian);
      report["polytope"] = polytope_to_json(polytope);
      if (parsed.contains("isometries")) {
        Json jchecks = Json::array();
        for (const Json& jm : parsed["isometries"]) {
          MatQ f = matq_from_json(jm);
          Json entry;
          entry["matrix"] = matq_to_json(f);
          entry["preserves_vertices"] = check_glnz_isometry(polytope, f);
          jchecks.push_back(std::move(entry));
        }
        report["isometry_checks"] = std::move(jchecks);
      }
    }

    if (!opts.csv_path.empty()) write_sample_csv(opts.csv_path, estimates);
    return 0;
  });
}

RunOutcome run_helly_graph(const std::string& input_text, const RunnerOptions& opts) {
  return run_guarded("helly-graph", input_text, [&](Json& report) {
    std::string text = trimmed(input_text);
    bool from_json = !text.empty() && text[0] == '{';
    bool cayley = false;
    FiniteGraph graph;
    if (from_json) {
      Json parsed = parse_json_text(text);
      cayley = graph_json_is_cayley(parsed);
      graph = graph_from_json(parsed);
    } else {
      BuiltinGraph builtin = builtin_graph(text);
      report["builtin"] = text;
      if (builtin.is_grid) {
        GridBoxReport grid = grid_box_helly(builtin.grid_dim, builtin.grid_m, opts.grid_vertex_cap);
        report["grid"] = Json{{"dim", grid.n}, {"m", grid.m}};
        report["method"] = "distance_match";
        report["pairs_checked"] = grid.pairs_checked;
        report["distances_match"] = grid.distances_match;
        if (!grid.distances_match)
          fail(ErrorKind::Internal, "grid distances disagree with the max metric");
        report["verdict"] = "Helly";
        return 0;
      }
      graph = builtin.graph;
    }
    report["input"] = graph_to_json(graph);
    report["method"] = "ball_enumeration";
    if (cayley) report["boundary_caveat"] = true;

    HellyVerdict verdict = is_helly(graph, opts.graph_vertex_cap);
    report["verdict"] = verdict.helly ? "Helly" : "NotHelly";
    report["nodes_examined"] = verdict.nodes_examined;
    if (verdict.helly) return 0;
    const BallFamily& family = *verdict.counterexample;
    if (!balls_pairwise_intersect(graph, family) || solve_ball_family(graph, family))
      fail(ErrorKind::Internal, "counterexample family failed re-verification");
    report["counterexample"] = ball_family_to_json(family);
    return 3;
  });
}

RunOutcome run_scaled_helly(const std::string& input_text, const RunnerOptions&) {
  return run_guarded("scaled-helly", input_text, [&](Json& report) {
    Json parsed = parse_json_text(input_text);
    ScaledHellyInstance instance = scaled_instance_from_json(parsed);
    validate_scaled_instance(instance);
    report["input"] = parsed;

    ScaledHellyResult result = scaled_helly_check(instance);
    Json radii = Json::array();
    for (std::int64_t r : result.radii_scaled) radii.push_back(r);
    report["radii_scaled"] = std::move(radii);
    report["solved"] = result.solved;
    if (result.solved) {
      report["solution"] = result.solution;
      Json residuals = Json::array();
      for (const Rational& r : result.residuals) residuals.push_back(rational_to_json(r));
      report["residuals"] = std::move(residuals);
    }
    report["residual_bound"] = rational_to_json(result.residual_bound);
    report["verdict"] = result.solved ? "Solved" : "NoSolution";
    return result.solved ? 0 : 3;
  });
}

RunOutcome run_pushout(const std::string& input_text, const RunnerOptions&) {
  return run_guarded("pushout", input_text, [&](Json& report) {
    Json parsed = parse_json_text(input_text);
    PushoutInput input = pushout_input_from_json(parsed);
    report["input"] = parsed;

    PushoutResult result = pushout_extension(input.g, input.n_subgroup, input.m, input.action, input.phi);
    Json orders;
    orders["g"] = input.g.order;
    orders["n"] = static_cast<int>(input.n_subgroup.size());
    orders["m"] = input.m.order;
    orders["extended"] = result.extended.order;
    orders["quotient"] = result.quotient.order;
    report["orders"] = std::move(orders);
    report["extended"] = group_table_to_json(result.extended);
    report["quotient"] = group_table_to_json(result.quotient);
    Json maps;
    maps["embed_m"] = result.embed_m;
    maps["map_g"] = result.map_g;
    maps["project_g"] = result.project_g;
    maps["project_ext"] = result.project_ext;
    report["maps"] = std::move(maps);

    SesCheck check = verify_ses_morphism(input.g, input.n_subgroup, input.m, input.phi, result);
    if (!check.ok) fail(ErrorKind::Internal, "construction failed its own diagram check: " + check.witness);
    report["ses_check"] = Json{{"ok", true}};
    return 0;
  });
}

RunOutcome run_lie(const std::string& input_text, const RunnerOptions&) {
  return run_guarded("lie", input_text, [&](Json& report) {
    std::string text = trimmed(input_text);
    LieAlgebra algebra;
    if (!text.empty() && text[0] == '{') {
      algebra = lie_from_json(parse_json_text(text));
    } else if (text == "heisenberg") {
      algebra = heisenberg_algebra();
      report["builtin"] = text;
    } else {
      fail(ErrorKind::InvalidInput, "unknown builtin algebra '" + text + "'");
    }
    report["input"] = lie_to_json(algebra);

    NilpotencyReport nilpotency = is_nilpotent(algebra);
    report["lower_central_series_dims"] = nilpotency.dims;
    report["nilpotent"] = nilpotency.nilpotent;
    report["nilpotency_class"] = nilpotency.nilpotency_class;
    if (nilpotency.nilpotent) {
      GradedAlgebra graded = associated_graded(algebra);
      Json jg;
      jg["weights"] = graded.weight;
      Json layers = Json::array();
      for (const std::vector<VecQ>& layer : graded.layers) {
        Json jlayer = Json::array();
        for (const VecQ& v : layer) jlayer.push_back(vecq_to_json(v));
        layers.push_back(std::move(jlayer));
      }
      jg["layers"] = std::move(layers);
      jg["bracket_trivial"] = graded.bracket_trivial;
      jg["algebra"] = lie_to_json(graded.algebra);
      report["graded"] = std::move(jg);
      BracketTransfer transfer = trivial_bracket_transfer(algebra);
      report["transfer"] = Json{{"graded_trivial", transfer.graded_trivial},
                                {"original_abelian", transfer.original_abelian}};
    }
    return 0;
  });
}

RunOutcome run_verify(const std::string& report_text, const RunnerOptions& opts) {
  return run_guarded("verify", report_text, [&](Json& report) {
    Json target = parse_json_text(report_text);
    std::string command = report_field(target, "command").get<std::string>();
    report["target_command"] = command;
    if (target.contains("error"))
      fail(ErrorKind::InvalidInput, "target report carries an error, nothing to verify");

    CheckList checks;
    if (command == "decide") {
      verify_decide_report(target, opts, checks);
    } else if (command == "helly-graph") {
      verify_helly_graph_report(target, opts, checks);
    } else if (command == "scaled-helly") {
      verify_scaled_report(target, opts, checks);
    } else if (command == "stablenorm") {
      verify_stablenorm_report(target, opts, checks);
    } else if (command == "pushout") {
      verify_pushout_report(target, opts, checks);
    } else if (command == "lie") {
      verify_lie_report(target, opts, checks);
    } else {
      fail(ErrorKind::InvalidInput, "cannot verify reports from command '" + command + "'");
    }
    report["checks"] = std::move(checks.checks);
    report["ok"] = checks.all_ok;
    return checks.all_ok ? 0 : 2;
  });
}

} // namespace helly
