#include "helly/errors.hpp"
#include "helly/json_io.hpp"
#include "helly/runner.hpp"

#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace helly;

namespace {

std::string read_fixture(const std::string& name) {
  std::string path = std::string(HELLY_FIXTURES_DIR) + "/" + name;
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::vector<std::string> kAllFixtures = {
    "cayley_z4.json",   "coxeter333.json", "coxeter333_reflections.json",
    "d6.json",          "dihedral_infinity.json", "glide.json",
    "heisenberg.json",  "hex_rot_dim3.json", "hexagon.json",
    "order3.json",      "order6.json",     "p1.json",
    "p2.json",          "p4.json",         "pm.json",
    "pushout_s3.json",  "pushout_z2.json", "pushout_z4.json",
    "rot3_dim3.json",   "scaled_grid.json", "sheared_p4.json",
    "square.json",
};

} // namespace

TEST_CASE("every fixture is valid json") {
  for (const std::string& name : kAllFixtures) {
    CAPTURE(name);
    CHECK_NOTHROW(parse_json_text(read_fixture(name)));
  }
}

TEST_CASE("rationals canonicalize through json") {
  CHECK(rational_to_json(rational_from_json(Json("3/6"))) == Json("1/2"));
  CHECK(rational_to_json(rational_from_json(Json(5))) == Json("5"));
  CHECK(rational_to_json(rational_from_json(Json("-4/2"))) == Json("-2"));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), Error);
  CHECK_THROWS_AS(rational_from_json(Json("pi")), Error);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), Error);
}

TEST_CASE("crystal json round trip is idempotent") {
  for (const std::string& name : {"p4.json", "coxeter333.json", "glide.json", "rot3_dim3.json"}) {
    CAPTURE(name);
    Json first = crystal_to_json(crystal_from_json(parse_json_text(read_fixture(name))));
    Json second = crystal_to_json(crystal_from_json(first));
    CHECK(first.dump() == second.dump());
  }
}

TEST_CASE("pulled back word metrics default to singleton words") {
  Json j = parse_json_text(read_fixture("p4.json"));
  Json metric;
  metric["kind"] = "pulled_back";
  metric["crystal"] = j;
  WordMetricSpec spec = word_metric_from_json(metric);
  REQUIRE(spec.kind == WordMetricSpec::Kind::PulledBack);
  REQUIRE(spec.pulled.words.size() == spec.pulled.crystal.generators.size());
  for (std::size_t i = 0; i < spec.pulled.words.size(); ++i) {
    CHECK(spec.pulled.words[i] == std::vector<int>{static_cast<int>(i) + 1});
  }
}

TEST_CASE("structured input errors carry the offending field") {
  CHECK_THROWS_WITH_AS(crystal_from_json(parse_json_text("{\"generators\": []}")),
                       doctest::Contains("dim"), Error);
  try {
    parse_json_text("{ definitely not json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
  try {
    crystal_from_json(parse_json_text("{\"dim\": 2}"));
    FAIL("expected a missing-field error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("input digest matches the frozen fnv1a64 vector") {
  CHECK(input_digest("abc") == "fnv1a64:e71fa2190541574b");
  CHECK(input_digest("abc") == input_digest("abc"));
  CHECK(input_digest("abc") != input_digest("abd"));
}

TEST_CASE("decide runs end to end on fixtures") {
  RunOutcome positive = run_decide(read_fixture("p4.json"));
  CHECK(positive.exit_code == 0);
  CHECK(positive.report["verdict"] == "Helly");
  CHECK(positive.report["command"] == "decide");
  CHECK(positive.report["point_group"]["order"] == 4);
  CHECK(positive.report.contains("certificate"));
  CHECK(positive.report.contains("linf_action"));
  CHECK(positive.report.contains("cubical_action"));
  CHECK(positive.report["input_digest"] == input_digest(read_fixture("p4.json")));

  RunOutcome negative = run_decide(read_fixture("coxeter333.json"));
  CHECK(negative.exit_code == 3);
  CHECK(negative.report["verdict"] == "NotHelly");
  CHECK(negative.report["obstruction"]["kind"] == "order");
}

TEST_CASE("reports are byte identical across runs and worker counts") {
  for (const std::string& name : {"p4.json", "coxeter333.json", "sheared_p4.json"}) {
    CAPTURE(name);
    std::string text = read_fixture(name);
    RunnerOptions serial;
    serial.decide.workers = 1;
    RunnerOptions parallel;
    parallel.decide.workers = 4;
    std::string a = strip_timing(run_decide(text, serial).report).dump();
    std::string b = strip_timing(run_decide(text, serial).report).dump();
    std::string c = strip_timing(run_decide(text, parallel).report).dump();
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("decide reports verify from their own content") {
  RunOutcome outcome = run_decide(read_fixture("sheared_p4.json"));
  REQUIRE(outcome.exit_code == 0);
  RunOutcome good = run_verify(outcome.report.dump());
  CHECK(good.exit_code == 0);
  CHECK(good.report["ok"] == true);
  CHECK(good.report["target_command"] == "decide");

  Json tampered = outcome.report;
  tampered["certificate"]["phi"][0][0] = "17";
  RunOutcome bad = run_verify(tampered.dump());
  CHECK(bad.exit_code == 2);
  CHECK(bad.report["ok"] == false);

  RunOutcome negative = run_decide(read_fixture("hex_rot_dim3.json"));
  REQUIRE(negative.exit_code == 3);
  CHECK(negative.report["obstruction"]["kind"] == "character");
  CHECK(run_verify(negative.report.dump()).exit_code == 0);
}

TEST_CASE("graph command covers builtins, json and caps") {
  RunOutcome c4 = run_helly_graph("C4");
  CHECK(c4.exit_code == 3);
  CHECK(c4.report["verdict"] == "NotHelly");
  CHECK(c4.report["method"] == "ball_enumeration");
  CHECK(c4.report.contains("counterexample"));
  CHECK(run_verify(c4.report.dump()).exit_code == 0);

  RunOutcome k5 = run_helly_graph("K5");
  CHECK(k5.exit_code == 0);
  CHECK(k5.report["verdict"] == "Helly");
  CHECK(run_verify(k5.report.dump()).exit_code == 0);

  RunOutcome grid = run_helly_graph("grid2x3");
  CHECK(grid.exit_code == 0);
  CHECK(grid.report["method"] == "distance_match");
  CHECK(grid.report["grid"]["m"] == 3);
  CHECK(grid.report["distances_match"] == true);
  CHECK(run_verify(grid.report.dump()).exit_code == 0);

  RunOutcome cayley = run_helly_graph(read_fixture("cayley_z4.json"));
  CHECK(cayley.report["boundary_caveat"] == true);

  RunOutcome bogus = run_helly_graph("Z9foo");
  CHECK(bogus.exit_code == 2);
  CHECK(bogus.report["error"]["kind"] == "invalid_input");
}

TEST_CASE("scaled helly command solves the grid fixture") {
  std::string text = read_fixture("scaled_grid.json");
  RunOutcome outcome = run_scaled_helly(text);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.report["verdict"] == "Solved");
  CHECK(outcome.report["solution"] == 24);
  CHECK(outcome.report["radii_scaled"] == Json::array({4, 4, 4}));
  CHECK(run_verify(outcome.report.dump()).exit_code == 0);

  Json tampered = outcome.report;
  tampered["solution"] = 0; // corner (0,0) misses every ball
  CHECK(run_verify(tampered.dump()).exit_code == 2);

  tampered = outcome.report;
  tampered["radii_scaled"][1] = 5;
  CHECK(run_verify(tampered.dump()).exit_code == 2);
}

TEST_CASE("stablenorm command reports estimates, polytope and isometries") {
  RunOutcome square = run_stablenorm(read_fixture("square.json"));
  CHECK(square.exit_code == 0);
  CHECK(square.report["estimates"].size() == 3);
  CHECK(square.report.contains("polytope"));
  CHECK(run_verify(square.report.dump()).exit_code == 0);

  RunOutcome hex = run_stablenorm(read_fixture("hexagon.json"));
  CHECK(hex.exit_code == 0);
  REQUIRE(hex.report.contains("isometry_checks"));
  for (const Json& entry : hex.report["isometry_checks"])
    CHECK(entry["preserves_vertices"] == true);
  CHECK(run_verify(hex.report.dump()).exit_code == 0);

  RunOutcome pulled = run_stablenorm(read_fixture("dihedral_infinity.json"));
  CHECK(pulled.exit_code == 0);
  CHECK_FALSE(pulled.report.contains("polytope"));
  CHECK(run_verify(pulled.report.dump()).exit_code == 0);
}

TEST_CASE("pushout command emits a verifiable diagram") {
  RunOutcome outcome = run_pushout(read_fixture("pushout_s3.json"));
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.report["orders"]["extended"] == 6);
  CHECK(outcome.report["orders"]["quotient"] == 2);
  CHECK(outcome.report["ses_check"]["ok"] == true);
  CHECK(run_verify(outcome.report.dump()).exit_code == 0);

  Json tampered = outcome.report;
  tampered["maps"]["embed_m"][1] = tampered["maps"]["embed_m"][2];
  CHECK(run_verify(tampered.dump()).exit_code == 2);
}

TEST_CASE("lie command reports the filtration and graded transfer") {
  RunOutcome outcome = run_lie("heisenberg");
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.report["nilpotent"] == true);
  CHECK(outcome.report["nilpotency_class"] == 2);
  CHECK(outcome.report["lower_central_series_dims"] == Json::array({3, 1, 0}));
  CHECK(outcome.report["graded"]["bracket_trivial"] == false);
  CHECK(outcome.report["transfer"]["original_abelian"] == false);
  CHECK(run_verify(outcome.report.dump()).exit_code == 0);

  RunOutcome file = run_lie(read_fixture("heisenberg.json"));
  CHECK(file.exit_code == 0);
  CHECK(strip_timing(file.report).dump() != ""); // parses and serializes

  Json tampered = outcome.report;
  tampered["lower_central_series_dims"] = Json::array({3, 2, 0});
  CHECK(run_verify(tampered.dump()).exit_code == 2);
}

TEST_CASE("failures surface as structured error reports") {
  RunOutcome garbage = run_decide("{ definitely not json");
  CHECK(garbage.exit_code == 2);
  CHECK(garbage.report["error"]["kind"] == "parse");
  CHECK(garbage.report.contains("timing_ms"));

  RunnerOptions tiny;
  tiny.decide.max_group_size = 3;
  RunOutcome capped = run_decide(read_fixture("coxeter333.json"), tiny);
  CHECK(capped.exit_code == 4);
  CHECK(capped.report["error"]["kind"] == "group_too_large");

  RunOutcome unknown = run_verify("{\"command\": \"dance\"}");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("strip timing removes only the timing field") {
  RunOutcome outcome = run_lie("heisenberg");
  Json stripped = strip_timing(outcome.report);
  CHECK_FALSE(stripped.contains("timing_ms"));
  CHECK(stripped["tool"] == outcome.report["tool"]);
  CHECK(stripped["nilpotent"] == outcome.report["nilpotent"]);
}
