#include "helly/word_metric.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace helly {

void validate_word_metric(const WordMetricSpec& spec) {
  if (spec.kind == WordMetricSpec::Kind::Abelian) {
    const AbelianMetric& m = spec.abelian;
    if (m.dim < 1) fail(ErrorKind::InvalidInput, "dimension must be positive");
    if (m.generators.empty()) fail(ErrorKind::InvalidInput, "no generators");
    std::set<VecZ> gens(m.generators.begin(), m.generators.end());
    for (const auto& g : m.generators) {
      if (g.size() != static_cast<std::size_t>(m.dim))
        fail(ErrorKind::InvalidInput, "generator length does not match dimension");
      bool zero = true;
      VecZ neg(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] != 0) zero = false;
        neg[i] = -g[i];
      }
      if (zero) fail(ErrorKind::InvalidInput, "zero generator");
      if (!gens.count(neg)) fail(ErrorKind::InvalidInput, "generating set is not symmetric");
    }
    std::vector<VecQ> rows;
    for (const auto& g : m.generators) {
      VecQ row;
      for (auto v : g) row.push_back(Rational(static_cast<long>(v)));
      rows.push_back(row);
    }
    if (rank(rows) < m.dim)
      fail(ErrorKind::InvalidInput, "generators do not span the lattice rationally");
  } else {
    validate_crystal_spec(spec.pulled.crystal);
    if (spec.pulled.words.empty()) fail(ErrorKind::InvalidInput, "no metric generator words");
    int gen_count = static_cast<int>(spec.pulled.crystal.generators.size());
    for (const auto& w : spec.pulled.words) {
      if (w.empty()) fail(ErrorKind::InvalidInput, "empty generator word");
      for (int letter : w)
        if (letter == 0 || std::abs(letter) > gen_count)
          fail(ErrorKind::InvalidInput, "word letter out of range");
    }
  }
}

namespace {

struct AffineElem {
  MatQ linear;
  VecQ translation;
};

AffineElem affine_mul(const AffineElem& a, const AffineElem& b) {
  return AffineElem{a.linear * b.linear, vec_add(a.translation, a.linear * b.translation)};
}

AffineElem affine_inverse(const AffineElem& a) {
  MatQ inv = mat_inverse(a.linear);
  return AffineElem{inv, vec_scale(Rational(-1), inv * a.translation)};
}

AffineElem word_element(const CrystalSpec& crystal, const std::vector<int>& word) {
  int n = crystal.dim;
  AffineElem acc{MatQ::identity(n), vec_zero(n)};
  for (int letter : word) {
    const CrystalGenerator& g = crystal.generators[std::abs(letter) - 1];
    AffineElem e{g.linear, g.translation};
    if (letter < 0) e = affine_inverse(e);
    acc = affine_mul(acc, e);
  }
  return acc;
}

// Pulled-back BFS state: point-group element index plus translation.
using PulledState = std::pair<int, VecQ>;

struct PulledWalk {
  FiniteMatrixGroup points;
  // step s from point-part p: next part step_part[p][s], translation
  // offset step_offset[p][s] (the generator translation rotated by p).
  std::vector<std::vector<int>> step_part;
  std::vector<std::vector<VecQ>> step_offset;
  int steps = 0;
};

PulledWalk build_pulled_walk(const PulledBackMetric& metric, std::int64_t budget) {
  std::vector<AffineElem> gens;
  for (const auto& w : metric.words) gens.push_back(word_element(metric.crystal, w));
  std::size_t forward = gens.size();
  for (std::size_t i = 0; i < forward; ++i) gens.push_back(affine_inverse(gens[i]));
  int n = metric.crystal.dim;
  for (const auto& g : gens)
    if (g.linear == MatQ::identity(n) && vec_is_zero(g.translation))
      fail(ErrorKind::InvalidInput, "a metric generator word is the identity");

  std::vector<MatQ> parts;
  for (const auto& g : gens) parts.push_back(g.linear);
  // Point-part closure size is a fine proxy cap here; the BFS budget
  // guards the real growth.
  FiniteMatrixGroup points = close_group(parts, static_cast<int>(std::min<std::int64_t>(budget, kDefaultMaxGroupSize)));

  PulledWalk walk;
  walk.steps = static_cast<int>(gens.size());
  walk.step_part.assign(points.size(), std::vector<int>(gens.size()));
  walk.step_offset.assign(points.size(), std::vector<VecQ>(gens.size()));
  for (int p = 0; p < points.size(); ++p)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      walk.step_part[p][s] = points.mult[p][points.generator_indices[s]];
      walk.step_offset[p][s] = points.elements[p] * gens[s].translation;
    }
  walk.points = std::move(points);
  return walk;
}

bool vecq_to_z(const VecQ& q, VecZ& out) {
  out.clear();
  for (const auto& v : q) {
    if (!is_integer(v)) return false;
    out.push_back(to_int64(v));
  }
  return true;
}

// Breadth-first distances over lattice points. `want` limits the
// search to given targets (then it stops once all are resolved);
// radius limits depth when nonnegative. Results are lattice points
// only; for pulled-back metrics interior states with nontrivial point
// part are explored but not reported.
struct LatticeBfsResult {
  std::vector<BallPoint> points; // sorted by (distance, point)
  std::vector<std::int64_t> target_distances;
};

LatticeBfsResult lattice_bfs(const WordMetricSpec& spec, std::int64_t radius,
                             const std::vector<VecZ>* targets, std::int64_t budget) {
  validate_word_metric(spec);
  LatticeBfsResult result;

  std::map<VecZ, std::int64_t> found; // lattice point -> distance
  std::int64_t pending = 0;
  std::map<VecZ, int> target_index;
  if (targets) {
    result.target_distances.assign(targets->size(), -1);
    for (std::size_t i = 0; i < targets->size(); ++i) {
      if ((*targets)[i].size() != static_cast<std::size_t>(spec.dim()))
        fail(ErrorKind::InvalidInput, "target length does not match dimension");
      if (!target_index.count((*targets)[i])) ++pending;
      target_index.emplace((*targets)[i], static_cast<int>(i));
    }
  }

  auto resolve = [&](const VecZ& point, std::int64_t dist) {
    bool fresh = found.emplace(point, dist).second;
    if (fresh && targets && target_index.count(point)) --pending;
  };

  std::int64_t visited = 0;
  auto charge = [&](std::int64_t count = 1) {
    visited += count;
    if (visited > budget)
      fail(ErrorKind::BudgetExceeded,
           "search visited more than " + std::to_string(budget) + " states");
  };

  if (spec.kind == WordMetricSpec::Kind::Abelian) {
    const auto& gens = spec.abelian.generators;
    std::map<VecZ, std::int64_t> dist;
    std::deque<VecZ> frontier;
    VecZ origin(spec.dim(), 0);
    dist.emplace(origin, 0);
    resolve(origin, 0);
    frontier.push_back(origin);
    charge();
    while (!frontier.empty()) {
      VecZ cur = frontier.front();
      frontier.pop_front();
      std::int64_t d = dist.at(cur);
      if (radius >= 0 && d >= radius) continue;
      if (targets && pending == 0) break;
      for (const auto& g : gens) {
        VecZ next(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) next[i] = cur[i] + g[i];
        if (dist.count(next)) continue;
        charge();
        dist.emplace(next, d + 1);
        resolve(next, d + 1);
        frontier.push_back(next);
      }
    }
  } else {
    PulledWalk walk = build_pulled_walk(spec.pulled, budget);
    std::map<PulledState, std::int64_t> dist;
    std::deque<PulledState> frontier;
    PulledState origin{0, vec_zero(spec.dim())};
    dist.emplace(origin, 0);
    VecZ origin_z(spec.dim(), 0);
    resolve(origin_z, 0);
    frontier.push_back(origin);
    charge();
    while (!frontier.empty()) {
      PulledState cur = frontier.front();
      frontier.pop_front();
      std::int64_t d = dist.at(cur);
      if (radius >= 0 && d >= radius) continue;
      if (targets && pending == 0) break;
      for (int s = 0; s < walk.steps; ++s) {
        PulledState next{walk.step_part[cur.first][s],
                         vec_add(cur.second, walk.step_offset[cur.first][s])};
        if (dist.count(next)) continue;
        charge();
        dist.emplace(next, d + 1);
        if (next.first == 0) {
          VecZ point;
          if (vecq_to_z(next.second, point)) resolve(point, d + 1);
        }
        frontier.push_back(next);
      }
    }
  }

  if (targets) {
    for (std::size_t i = 0; i < targets->size(); ++i) {
      auto it = found.find((*targets)[i]);
      if (it == found.end())
        fail(ErrorKind::InvalidInput, "target is not reachable from the origin");
      result.target_distances[i] = it->second;
    }
  } else {
    for (const auto& [point, d] : found)
      if (radius < 0 || d <= radius) result.points.push_back(BallPoint{point, d});
    std::sort(result.points.begin(), result.points.end(), [](const BallPoint& a, const BallPoint& b) {
      if (a.distance != b.distance) return a.distance < b.distance;
      return a.point < b.point;
    });
  }
  return result;
}

} // namespace

std::vector<BallPoint> ball_growth(const WordMetricSpec& spec, std::int64_t radius,
                                   std::int64_t budget) {
  if (radius < 0) fail(ErrorKind::InvalidInput, "radius must be nonnegative");
  return lattice_bfs(spec, radius, nullptr, budget).points;
}

std::vector<std::int64_t> point_distances(const WordMetricSpec& spec,
                                          const std::vector<VecZ>& targets, std::int64_t budget) {
  return lattice_bfs(spec, -1, &targets, budget).target_distances;
}

DirectionalEstimate directional_limit(const WordMetricSpec& spec, const VecZ& direction,
                                      std::int64_t k_max, std::int64_t budget) {
  if (k_max < 1) fail(ErrorKind::InvalidInput, "k_max must be positive");
  bool zero = true;
  for (auto v : direction)
    if (v != 0) zero = false;
  if (zero) fail(ErrorKind::InvalidInput, "direction must be nonzero");

  std::vector<std::int64_t> ks;
  for (std::int64_t k = 1; k < k_max; k *= 2) ks.push_back(k);
  ks.push_back(k_max);

  std::vector<VecZ> targets;
  for (auto k : ks) {
    VecZ t(direction.size());
    for (std::size_t i = 0; i < direction.size(); ++i) t[i] = k * direction[i];
    targets.push_back(t);
  }
  std::vector<std::int64_t> dists = point_distances(spec, targets, budget);

  DirectionalEstimate est;
  est.direction = direction;
  for (std::size_t i = 0; i < ks.size(); ++i)
    est.samples.push_back(DirectionalSample{ks[i], dists[i]});

  est.upper = Rational(static_cast<long>(dists[0]));
  for (std::size_t i = 0; i < ks.size(); ++i) {
    Rational ratio = rat(static_cast<long>(dists[i]), static_cast<long>(ks[i]));
    if (ratio < est.upper) est.upper = ratio;
  }
  est.surrogate_constant = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    Rational defect = Rational(static_cast<long>(dists[i])) -
                      Rational(static_cast<long>(ks[i])) * est.upper;
    if (defect > est.surrogate_constant) est.surrogate_constant = defect;
  }
  est.lower = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    Rational low = (Rational(static_cast<long>(dists[i])) - est.surrogate_constant) /
                   Rational(static_cast<long>(ks[i]));
    if (low > est.lower) est.lower = low;
  }
  if (est.lower > est.upper) fail(ErrorKind::Internal, "directional bracket inverted");
  est.constants_are_surrogates = true;
  return est;
}

RoughEquivalenceProbe rough_equivalence_probe(const WordMetricSpec& a, const WordMetricSpec& b,
                                              std::int64_t radius, std::int64_t budget) {
  if (a.dim() != b.dim()) fail(ErrorKind::InvalidInput, "metrics live on different lattices");
  if (radius < 1) fail(ErrorKind::InvalidInput, "radius must be positive");
  auto ball_a = ball_growth(a, radius, budget);
  auto ball_b = ball_growth(b, radius, budget);
  std::map<VecZ, std::int64_t> da, db;
  for (const auto& p : ball_a) da.emplace(p.point, p.distance);
  for (const auto& p : ball_b) db.emplace(p.point, p.distance);

  RoughEquivalenceProbe probe;
  for (std::int64_t r = 1; r <= radius; ++r) {
    std::int64_t worst = 0;
    for (const auto& [point, d1] : da) {
      auto it = db.find(point);
      if (it == db.end()) continue;
      if (d1 > r || it->second > r) continue;
      worst = std::max(worst, std::abs(d1 - it->second));
    }
    probe.deviation_profile.emplace_back(r, worst);
  }
  probe.max_deviation = probe.deviation_profile.back().second;
  std::size_t len = probe.deviation_profile.size();
  std::size_t window = std::min<std::size_t>(3, len - 1);
  probe.stabilized = true;
  for (std::size_t i = len - window; i < len; ++i)
    if (probe.deviation_profile[i].second != probe.deviation_profile[len - 1].second)
      probe.stabilized = false;
  return probe;
}

} // namespace helly
