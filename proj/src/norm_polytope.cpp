#include "helly/norm_polytope.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace helly {

namespace {

// All index subsets of {0..count-1} of size 1..max_size, in
// lexicographic order.
void for_each_subset(int count, int max_size, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> subset;
  // Returns false to stop the whole enumeration.
  std::function<bool(int)> rec = [&](int start) {
    if (!subset.empty())
      if (!visit(subset)) return false;
    if (static_cast<int>(subset.size()) == max_size) return true;
    for (int i = start; i < count; ++i) {
      subset.push_back(i);
      if (!rec(i + 1)) return false;
      subset.pop_back();
    }
    return true;
  };
  rec(0);
}

} // namespace

bool in_convex_hull(const std::vector<VecQ>& points, const VecQ& v) {
  if (points.empty()) return false;
  int d = static_cast<int>(v.size());
  for (const auto& p : points)
    if (p == v) return true;
  bool inside = false;
  // Caratheodory: membership is witnessed by some subset of at most
  // d+1 points.
  for_each_subset(static_cast<int>(points.size()), d + 1, [&](const std::vector<int>& subset) {
    MatQ system(d + 1, static_cast<int>(subset.size()));
    for (int j = 0; j < static_cast<int>(subset.size()); ++j) {
      for (int i = 0; i < d; ++i) system.at(i, j) = points[subset[j]][i];
      system.at(d, j) = 1; // barycentric row
    }
    VecQ rhs = v;
    rhs.push_back(Rational(1));
    VecQ lambda;
    if (solve_linear(system, rhs, lambda)) {
      bool nonneg = true;
      for (const auto& l : lambda)
        if (l < 0) { nonneg = false; break; }
      if (nonneg) {
        inside = true;
        return false;
      }
    }
    return true;
  });
  return inside;
}

NormPolytope stable_norm_polytope(const AbelianMetric& metric) {
  WordMetricSpec spec;
  spec.kind = WordMetricSpec::Kind::Abelian;
  spec.abelian = metric;
  validate_word_metric(spec);

  std::set<VecQ> distinct;
  for (const auto& g : metric.generators) {
    VecQ q;
    for (auto x : g) q.push_back(Rational(static_cast<long>(x)));
    distinct.insert(q);
  }
  std::vector<VecQ> points(distinct.begin(), distinct.end());

  NormPolytope poly;
  poly.dim = metric.dim;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<VecQ> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!in_convex_hull(others, points[i])) poly.vertices.push_back(points[i]);
  }
  std::sort(poly.vertices.begin(), poly.vertices.end());

  for (const auto& v : poly.vertices) {
    VecQ neg = vec_scale(Rational(-1), v);
    if (!std::binary_search(poly.vertices.begin(), poly.vertices.end(), neg))
      fail(ErrorKind::Internal, "vertex set of a symmetric hull is not symmetric");
  }
  return poly;
}

Rational gauge(const NormPolytope& polytope, const VecQ& x) {
  if (x.size() != static_cast<std::size_t>(polytope.dim))
    fail(ErrorKind::InvalidInput, "point dimension does not match polytope");
  if (vec_is_zero(x)) return Rational(0);
  int d = polytope.dim;
  int count = static_cast<int>(polytope.vertices.size());

  bool found = false;
  Rational best(0);
  // Some optimal conic representation is basic, i.e. supported on a
  // linearly independent vertex subset of size at most d.
  for_each_subset(count, d, [&](const std::vector<int>& subset) {
    MatQ system(d, static_cast<int>(subset.size()));
    for (int j = 0; j < static_cast<int>(subset.size()); ++j)
      for (int i = 0; i < d; ++i) system.at(i, j) = polytope.vertices[subset[j]][i];
    VecQ lambda;
    if (!solve_linear(system, x, lambda)) return true;
    Rational total(0);
    for (const auto& l : lambda) {
      if (l < 0) return true;
      total += l;
    }
    if (!found || total < best) {
      best = total;
      found = true;
    }
    return true;
  });
  if (!found)
    fail(ErrorKind::InvalidInput, "point is outside the cone of the polytope");
  return best;
}

bool check_glnz_isometry(const NormPolytope& polytope, const MatQ& f) {
  if (f.rows() != polytope.dim || f.cols() != polytope.dim) return false;
  if (!is_integer_matrix(f)) return false;
  Rational d = det(f);
  if (d != 1 && d != -1) return false;
  std::vector<VecQ> image;
  for (const auto& v : polytope.vertices) image.push_back(f * v);
  std::sort(image.begin(), image.end());
  return image == polytope.vertices;
}

} // namespace helly
