#include "helly/errors.hpp"
#include "helly/norm_polytope.hpp"
#include "helly/word_metric.hpp"

#include "doctest.h"

#include <random>

using namespace helly;

namespace {

WordMetricSpec taxicab() {
  WordMetricSpec spec;
  spec.kind = WordMetricSpec::Kind::Abelian;
  spec.abelian.dim = 2;
  spec.abelian.generators = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  spec.name = "taxicab";
  return spec;
}

WordMetricSpec hexagonal() {
  WordMetricSpec spec;
  spec.kind = WordMetricSpec::Kind::Abelian;
  spec.abelian.dim = 2;
  spec.abelian.generators = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  spec.name = "hexagonal";
  return spec;
}

CrystalSpec infinite_dihedral() {
  CrystalSpec spec;
  spec.dim = 1;
  MatQ neg(1, 1);
  neg.at(0, 0) = rat(-1);
  spec.generators.push_back({neg, {rat(0)}});
  spec.generators.push_back({neg, {rat(1)}});
  spec.name = "infinite-dihedral";
  return spec;
}

WordMetricSpec dihedral_metric() {
  WordMetricSpec spec;
  spec.kind = WordMetricSpec::Kind::PulledBack;
  spec.pulled.crystal = infinite_dihedral();
  spec.pulled.words = {{1}, {2}};
  spec.name = "reflection-pair";
  return spec;
}

VecQ q(std::initializer_list<int> entries) {
  VecQ v;
  for (int e : entries) v.push_back(rat(e));
  return v;
}

} // namespace

TEST_CASE("validation rejects asymmetric or rank-deficient generating sets") {
  WordMetricSpec bad = taxicab();
  bad.abelian.generators = {{1, 0}, {-1, 0}, {0, 1}};
  CHECK_THROWS_AS(validate_word_metric(bad), Error);

  WordMetricSpec flat = taxicab();
  flat.abelian.generators = {{1, 0}, {-1, 0}};
  CHECK_THROWS_AS(validate_word_metric(flat), Error);

  WordMetricSpec zero = taxicab();
  zero.abelian.generators.push_back({0, 0});
  CHECK_THROWS_AS(validate_word_metric(zero), Error);
}

TEST_CASE("reflection words compose to double-length translations") {
  // Both generators reflect, so a lattice translation needs two
  // letters: d(0, n) = 2|n| on the line.
  WordMetricSpec spec = dihedral_metric();
  std::vector<std::int64_t> d = point_distances(spec, {{1}, {2}, {3}, {-2}});
  CHECK(d == std::vector<std::int64_t>{2, 4, 6, 4});
}

TEST_CASE("ball growth lists lattice points sorted by distance") {
  WordMetricSpec spec = dihedral_metric();
  std::vector<BallPoint> ball = ball_growth(spec, 4);
  REQUIRE(ball.size() == 5);
  CHECK(ball[0].point == VecZ{0});
  CHECK(ball[0].distance == 0);
  CHECK(ball[1].point == VecZ{-1});
  CHECK(ball[1].distance == 2);
  CHECK(ball[2].point == VecZ{1});
  CHECK(ball[3].distance == 4);
  CHECK(ball[4].distance == 4);
}

TEST_CASE("word generating sets can recover the plain lattice metric") {
  WordMetricSpec two_step = dihedral_metric();
  two_step.pulled.words = {{1, 2}, {2, 1}};
  std::vector<std::int64_t> d = point_distances(two_step, {{1}, {4}, {-3}});
  CHECK(d == std::vector<std::int64_t>{1, 4, 3});
}

TEST_CASE("taxicab directional limits are exact") {
  WordMetricSpec spec = taxicab();
  DirectionalEstimate e1 = directional_limit(spec, {1, 0});
  CHECK(e1.lower == rat(1));
  CHECK(e1.upper == rat(1));
  DirectionalEstimate e2 = directional_limit(spec, {1, 1});
  CHECK(e2.lower == rat(2));
  CHECK(e2.upper == rat(2));
  DirectionalEstimate e3 = directional_limit(spec, {2, 1});
  CHECK(e3.lower == rat(3));
  CHECK(e3.upper == rat(3));
  CHECK(e3.surrogate_constant == rat(0));
  CHECK(e3.constants_are_surrogates);
  // Samples double up to and include k_max.
  REQUIRE(!e3.samples.empty());
  CHECK(e3.samples.back().k == 32);
  CHECK(e3.samples.back().distance == 96);
}

TEST_CASE("hexagonal metric measures the antidiagonal at 2") {
  WordMetricSpec spec = hexagonal();
  DirectionalEstimate diag = directional_limit(spec, {1, 1});
  CHECK(diag.lower == rat(1));
  CHECK(diag.upper == rat(1));
  DirectionalEstimate anti = directional_limit(spec, {1, -1});
  CHECK(anti.lower == rat(2));
  CHECK(anti.upper == rat(2));
}

TEST_CASE("directional brackets always satisfy lower <= upper") {
  WordMetricSpec spec = hexagonal();
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    VecZ z{coord(rng), coord(rng)};
    if (z[0] == 0 && z[1] == 0) continue;
    DirectionalEstimate e = directional_limit(spec, z, 16);
    CHECK(e.lower <= e.upper);
    CHECK(e.lower >= 0);
  }
}

TEST_CASE("limit polytope keeps exactly the extreme generators") {
  NormPolytope square = stable_norm_polytope(taxicab().abelian);
  REQUIRE(square.vertices.size() == 4);
  CHECK(square.vertices[0] == q({-1, 0}));
  CHECK(square.vertices[1] == q({0, -1}));
  CHECK(square.vertices[2] == q({0, 1}));
  CHECK(square.vertices[3] == q({1, 0}));

  NormPolytope hex = stable_norm_polytope(hexagonal().abelian);
  CHECK(hex.vertices.size() == 6);

  AbelianMetric redundant;
  redundant.dim = 2;
  redundant.generators = {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {-1, -1}};
  NormPolytope thinned = stable_norm_polytope(redundant);
  CHECK(thinned.vertices.size() == 4);
  for (const VecQ& v : thinned.vertices) CHECK(rat_abs(v[0]) + rat_abs(v[1]) == rat(2));
}

TEST_CASE("gauge evaluates known norms exactly") {
  NormPolytope square = stable_norm_polytope(taxicab().abelian);
  CHECK(gauge(square, q({3, 4})) == rat(7));
  CHECK(gauge(square, q({0, 0})) == rat(0));
  CHECK(gauge(square, {rat(1, 2), rat(1, 2)}) == rat(1));

  NormPolytope hex = stable_norm_polytope(hexagonal().abelian);
  CHECK(gauge(hex, q({1, -1})) == rat(2));
  CHECK(gauge(hex, q({2, 1})) == rat(2));
  CHECK(gauge(hex, q({1, 1})) == rat(1));
}

TEST_CASE("gauge satisfies the norm axioms on random rational points") {
  NormPolytope hex = stable_norm_polytope(hexagonal().abelian);
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    VecQ x{rat(num(rng), den(rng)), rat(num(rng), den(rng))};
    VecQ y{rat(num(rng), den(rng)), rat(num(rng), den(rng))};
    Rational gx = gauge(hex, x);
    Rational gy = gauge(hex, y);
    CHECK(gx >= 0);
    CHECK((gx == 0) == vec_is_zero(x));
    Rational lambda = rat(num(rng), den(rng));
    CHECK(gauge(hex, vec_scale(lambda, x)) == rat_abs(lambda) * gx);
    CHECK(gauge(hex, vec_add(x, y)) <= gx + gy);
  }
}

TEST_CASE("lattice symmetries of the polytope are recognized") {
  NormPolytope hex = stable_norm_polytope(hexagonal().abelian);
  MatQ rot(2, 2);
  rot.at(0, 1) = rat(-1);
  rot.at(1, 0) = rat(1);
  rot.at(1, 1) = rat(-1);
  CHECK(check_glnz_isometry(hex, rot));

  MatQ shear = MatQ::identity(2);
  shear.at(0, 1) = rat(1);
  CHECK_FALSE(check_glnz_isometry(hex, shear));

  NormPolytope square = stable_norm_polytope(taxicab().abelian);
  MatQ r90(2, 2);
  r90.at(0, 1) = rat(-1);
  r90.at(1, 0) = rat(1);
  CHECK(check_glnz_isometry(square, r90));
}

TEST_CASE("word metrics agree with the gauge along sampled rays") {
  // For abelian metrics the sampled distance dominates the gauge and
  // the per-k defect stays bounded, so the bracket never undershoots.
  WordMetricSpec spec = hexagonal();
  NormPolytope hex = stable_norm_polytope(spec.abelian);
  for (VecZ z : {VecZ{1, 0}, VecZ{1, -1}, VecZ{2, 1}, VecZ{3, -2}}) {
    DirectionalEstimate e = directional_limit(spec, z, 16);
    VecQ zq{rat(z[0]), rat(z[1])};
    CHECK(e.upper >= gauge(hex, zq));
    CHECK(e.lower <= e.upper);
  }
}

TEST_CASE("equivalent metrics show a stabilized deviation profile") {
  WordMetricSpec direct;
  direct.kind = WordMetricSpec::Kind::Abelian;
  direct.abelian.dim = 1;
  direct.abelian.generators = {{1}, {-1}};
  WordMetricSpec two_step = dihedral_metric();
  two_step.pulled.words = {{1, 2}, {2, 1}};
  RoughEquivalenceProbe probe = rough_equivalence_probe(direct, two_step, 6);
  CHECK(probe.max_deviation == 0);
  CHECK(probe.stabilized);
}

TEST_CASE("bfs budgets surface as budget errors") {
  WordMetricSpec spec = taxicab();
  CHECK_THROWS_AS(ball_growth(spec, 50, 100), Error);
}
