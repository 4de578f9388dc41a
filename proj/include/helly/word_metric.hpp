#pragma once

#include "helly/crystal.hpp"
#include "helly/matq.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace helly {

// Word metric on Z^n from a finite symmetric generating set.
struct AbelianMetric {
  int dim = 0;
  std::vector<VecZ> generators;
};

// Metric on the translation lattice of a crystal group, pulled back
// from the word metric of the whole group: the distance between
// lattice vectors x and y is the word length of the pure translation
// by y - x. Distinct lattice points are distinct group elements, so
// the discrete correction term that separates same-point elements
// never contributes here. Each metric generator is a word in the
// crystal generators (1-based indices, negative for inverses);
// inverse words are added automatically.
struct PulledBackMetric {
  CrystalSpec crystal;
  std::vector<std::vector<int>> words;
};

struct WordMetricSpec {
  enum class Kind { Abelian, PulledBack };
  Kind kind = Kind::Abelian;
  AbelianMetric abelian;
  PulledBackMetric pulled;
  std::string name;

  int dim() const { return kind == Kind::Abelian ? abelian.dim : pulled.crystal.dim; }
};

// Abelian: generators nonzero, symmetric under negation, full rank.
// Pulled back: valid crystal, nonempty non-identity words.
void validate_word_metric(const WordMetricSpec& spec);

inline constexpr std::int64_t kDefaultBfsBudget = 1000000;

struct BallPoint {
  VecZ point;
  std::int64_t distance;
};

// All lattice points within the given distance of the origin, sorted
// by (distance, point). Throws BudgetExceeded when the search would
// visit more states than the budget allows.
std::vector<BallPoint> ball_growth(const WordMetricSpec& spec, std::int64_t radius,
                                   std::int64_t budget = kDefaultBfsBudget);

// Distances from the origin to each target, one BFS. Throws
// InvalidInput if a target is provably unreachable (search space
// exhausted), BudgetExceeded otherwise; on an infinite lattice an
// unreachable target (e.g. wrong parity) surfaces as a budget error.
std::vector<std::int64_t> point_distances(const WordMetricSpec& spec,
                                          const std::vector<VecZ>& targets,
                                          std::int64_t budget = kDefaultBfsBudget);

struct DirectionalSample {
  std::int64_t k;
  std::int64_t distance; // d(0, k*direction)
};

// Bracket for lim d(0, k z)/k from finitely many samples. The limit
// exists by subadditivity and upper is exact: min over samples of
// d(0,kz)/k. The lower bound uses the largest defect observed on the
// sampled range as a stand-in for the true subadditivity constant,
// hence surrogate = true on every estimate; when the samples achieve
// the limit exactly the defect is zero and the bracket collapses.
struct DirectionalEstimate {
  VecZ direction;
  std::vector<DirectionalSample> samples;
  Rational lower;
  Rational upper;
  Rational surrogate_constant;
  bool constants_are_surrogates = true;
};

// Samples k = 1, 2, 4, ... capped by and always including k_max.
DirectionalEstimate directional_limit(const WordMetricSpec& spec, const VecZ& direction,
                                      std::int64_t k_max = 32,
                                      std::int64_t budget = kDefaultBfsBudget);

// Compares two word metrics on the same lattice out to the given
// radius: deviation[r] = max |d1 - d2| over points with both
// distances at most r. Empirical evidence for rough equivalence, not
// a proof; the verdict only reports whether the deviation stopped
// growing on the sampled range.
struct RoughEquivalenceProbe {
  std::vector<std::pair<std::int64_t, std::int64_t>> deviation_profile;
  std::int64_t max_deviation = 0;
  bool stabilized = false;
};

RoughEquivalenceProbe rough_equivalence_probe(const WordMetricSpec& a, const WordMetricSpec& b,
                                              std::int64_t radius,
                                              std::int64_t budget = kDefaultBfsBudget);

} // namespace helly
