#pragma once

#include "helly/matq.hpp"
#include "helly/word_metric.hpp"

#include <vector>

namespace helly {

// Unit ball of the large-scale norm of an abelian word metric: the
// convex hull of the generators. Stored by its extreme points, sorted
// lexicographically. Centrally symmetric because the generating set
// is.
struct NormPolytope {
  int dim = 0;
  std::vector<VecQ> vertices;
};

// Extreme points of the convex hull of the generators. Throws
// InvalidInput on rank-deficient or asymmetric input (the hull must
// be a full-dimensional symmetric body for the gauge to be a norm).
NormPolytope stable_norm_polytope(const AbelianMetric& metric);

// Exact gauge of x with respect to the polytope: the least t >= 0
// with x in t * hull(vertices). Computed from basic solutions: some
// optimal conic combination is supported on a linearly independent
// subset of vertices, so minimizing over those subsets is exact.
Rational gauge(const NormPolytope& polytope, const VecQ& x);

// Membership test for v in hull(points), by Caratheodory subsets.
bool in_convex_hull(const std::vector<VecQ>& points, const VecQ& v);

// True iff f is unimodular integer and permutes the vertex set; such
// lattice maps are exactly the ones preserving the norm.
bool check_glnz_isometry(const NormPolytope& polytope, const MatQ& f);

} // namespace helly
