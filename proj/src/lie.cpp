#include "helly/lie.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <string>

namespace helly {

LieAlgebra make_lie_algebra(int dim, std::vector<Rational> constants, std::string name) {
  if (dim < 1) fail(ErrorKind::InvalidInput, "dimension must be positive");
  if (constants.size() != static_cast<std::size_t>(dim) * dim * dim)
    fail(ErrorKind::InvalidInput, "structure constant count must be dim^3");
  LieAlgebra g;
  g.dim = dim;
  g.c = std::move(constants);
  g.name = std::move(name);

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (g.structure(i, j, k) != -g.structure(j, i, k))
          fail(ErrorKind::InvalidInput,
               "bracket is not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");

  VecQ ei(dim, Rational(0)), ej(dim, Rational(0)), ek(dim, Rational(0));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        std::fill(ei.begin(), ei.end(), Rational(0));
        std::fill(ej.begin(), ej.end(), Rational(0));
        std::fill(ek.begin(), ek.end(), Rational(0));
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        VecQ sum = vec_add(vec_add(bracket(g, bracket(g, ei, ej), ek), bracket(g, bracket(g, ej, ek), ei)),
                           bracket(g, bracket(g, ek, ei), ej));
        if (!vec_is_zero(sum))
          fail(ErrorKind::InvalidInput,
               "Jacobi identity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")");
      }
  return g;
}

LieAlgebra heisenberg_algebra() {
  std::vector<Rational> c(27, Rational(0));
  LieAlgebra g;
  g.dim = 3;
  g.c = std::move(c);
  g.structure(0, 1, 2) = 1;
  g.structure(1, 0, 2) = -1;
  return make_lie_algebra(3, g.c, "heisenberg");
}

VecQ bracket(const LieAlgebra& g, const VecQ& x, const VecQ& y) {
  if (x.size() != static_cast<std::size_t>(g.dim) || y.size() != static_cast<std::size_t>(g.dim))
    fail(ErrorKind::InvalidInput, "vector dimension does not match algebra");
  VecQ out(g.dim, Rational(0));
  for (int i = 0; i < g.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < g.dim; ++j) {
      if (y[j] == 0) continue;
      Rational coeff = x[i] * y[j];
      for (int k = 0; k < g.dim; ++k) {
        const Rational& s = g.structure(i, j, k);
        if (s != 0) out[k] += coeff * s;
      }
    }
  }
  return out;
}

Subspace span_of(std::vector<VecQ> vectors) {
  Subspace s;
  if (vectors.empty()) return s;
  rref(vectors);
  s.basis = std::move(vectors);
  return s;
}

bool subspace_contains(const Subspace& s, const VecQ& v) {
  if (vec_is_zero(v)) return true;
  std::vector<VecQ> rows = s.basis;
  rows.push_back(v);
  return rank(rows) == static_cast<int>(s.basis.size());
}

bool subspace_equal(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  int n = g.dim;
  std::vector<VecQ> full;
  for (int i = 0; i < n; ++i) {
    VecQ e(n, Rational(0));
    e[i] = 1;
    full.push_back(e);
  }
  std::vector<Subspace> series{span_of(full)};
  while (true) {
    const Subspace& prev = series.back();
    std::vector<VecQ> products;
    for (const auto& x : full)
      for (const auto& y : prev.basis) {
        VecQ z = bracket(g, x, y);
        if (!vec_is_zero(z)) products.push_back(z);
      }
    Subspace next = span_of(products);
    bool stabilized = subspace_equal(next, prev);
    series.push_back(std::move(next));
    // A nonzero stabilized term appears exactly once, as does a
    // terminal zero.
    if (stabilized || series.back().dimension() == 0) break;
  }
  return series;
}

NilpotencyReport is_nilpotent(const LieAlgebra& g) {
  NilpotencyReport report;
  auto series = lower_central_series(g);
  for (const auto& s : series) report.dims.push_back(s.dimension());
  report.nilpotent = series.back().dimension() == 0;
  report.nilpotency_class = report.nilpotent ? static_cast<int>(series.size()) - 1 : -1;
  return report;
}

GradedAlgebra associated_graded(const LieAlgebra& g) {
  auto series = lower_central_series(g);
  if (series.back().dimension() != 0)
    fail(ErrorKind::InvalidInput, "algebra is not nilpotent; no associated graded algebra");

  int n = g.dim;
  GradedAlgebra graded;

  // Layer i: extend a basis of g_{i+1} to g_i; the new vectors
  // represent the quotient.
  int depth = static_cast<int>(series.size()) - 1; // last term is zero
  for (int layer = 0; layer < depth; ++layer) {
    const Subspace& upper = series[layer];
    const Subspace& lower = series[layer + 1];
    std::vector<VecQ> accumulated = lower.basis;
    std::vector<VecQ> reps;
    for (const auto& v : upper.basis) {
      std::vector<VecQ> probe = accumulated;
      probe.push_back(v);
      if (rank(probe) > static_cast<int>(accumulated.size())) {
        reps.push_back(v);
        accumulated.push_back(v);
      }
    }
    if (static_cast<int>(reps.size()) != upper.dimension() - lower.dimension())
      fail(ErrorKind::Internal, "layer extraction lost dimensions");
    graded.layers.push_back(std::move(reps));
  }

  std::vector<VecQ> basis; // graded basis in original coordinates
  for (std::size_t layer = 0; layer < graded.layers.size(); ++layer)
    for (const auto& v : graded.layers[layer]) {
      basis.push_back(v);
      graded.weight.push_back(static_cast<int>(layer) + 1);
    }
  if (static_cast<int>(basis.size()) != n) fail(ErrorKind::Internal, "graded basis has wrong size");

  // Structure constants: the bracket of weight-a and weight-b
  // representatives lies in g_{a+b}; its class mod g_{a+b+1} has
  // coordinates over the weight-(a+b) representatives.
  LieAlgebra out;
  out.dim = n;
  out.c.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
  out.name = g.name.empty() ? "graded" : g.name + ".graded";
  graded.bracket_trivial = true;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int w = graded.weight[a] + graded.weight[b];
      VecQ z = bracket(g, basis[a], basis[b]);
      if (w > depth) {
        if (!subspace_contains(series[depth], z)) // zero subspace
          fail(ErrorKind::Internal, "bracket escapes the filtration");
        continue;
      }
      if (!subspace_contains(series[w - 1], z))
        fail(ErrorKind::Internal, "bracket escapes the filtration");
      // Solve z = reps_w * lambda + basis(g_{w+1}) * mu.
      const auto& reps = graded.layers[w - 1];
      const auto& tail = series[w].basis;
      MatQ system(n, static_cast<int>(reps.size() + tail.size()));
      for (std::size_t col = 0; col < reps.size(); ++col)
        for (int row = 0; row < n; ++row) system.at(row, static_cast<int>(col)) = reps[col][row];
      for (std::size_t col = 0; col < tail.size(); ++col)
        for (int row = 0; row < n; ++row)
          system.at(row, static_cast<int>(reps.size() + col)) = tail[col][row];
      VecQ coeffs;
      if (!solve_linear(system, z, coeffs))
        fail(ErrorKind::Internal, "bracket has no layer decomposition");
      int offset = 0;
      for (int layer = 0; layer < w - 1; ++layer) offset += static_cast<int>(graded.layers[layer].size());
      for (std::size_t r = 0; r < reps.size(); ++r) {
        out.structure(a, b, offset + static_cast<int>(r)) = coeffs[r];
        if (coeffs[r] != 0) graded.bracket_trivial = false;
      }
    }

  graded.algebra = make_lie_algebra(n, out.c, out.name); // re-validates exactly
  return graded;
}

BracketTransfer trivial_bracket_transfer(const LieAlgebra& g) {
  GradedAlgebra graded = associated_graded(g);
  auto series = lower_central_series(g);
  BracketTransfer transfer;
  transfer.graded_trivial = graded.bracket_trivial;
  transfer.original_abelian = series.size() >= 2 ? series[1].dimension() == 0 : true;
  if (transfer.graded_trivial && !transfer.original_abelian)
    fail(ErrorKind::Internal, "trivial graded bracket with nonabelian source");
  return transfer;
}

namespace {

// Random unimodular change of basis from elementary row operations.
MatQ random_unimodular(std::mt19937_64& rng, int n) {
  MatQ t = MatQ::identity(n);
  int ops = 2 * n;
  for (int step = 0; step < ops; ++step) {
    int i = static_cast<int>(rng() % n);
    int j = static_cast<int>(rng() % n);
    if (i == j) continue;
    long coeff = static_cast<long>(rng() % 3) - 1;
    if (coeff == 0) continue;
    for (int col = 0; col < n; ++col) t.at(i, col) += Rational(coeff) * t.at(j, col);
  }
  return t;
}

LieAlgebra change_basis(const LieAlgebra& g, const MatQ& t) {
  // New basis f_i = sum_j t(j,i) e_j; constants transform by
  // c'(a,b,k) = sum over the old constants conjugated through t.
  int n = g.dim;
  MatQ tinv = mat_inverse(t);
  std::vector<Rational> constants(static_cast<std::size_t>(n) * n * n, Rational(0));
  LieAlgebra out;
  out.dim = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      VecQ fa(n, Rational(0)), fb(n, Rational(0));
      for (int row = 0; row < n; ++row) {
        fa[row] = t.at(row, a);
        fb[row] = t.at(row, b);
      }
      VecQ z = bracket(g, fa, fb);   // in old coordinates
      VecQ coords = tinv * z;        // back to the new basis
      for (int k = 0; k < n; ++k)
        constants[(static_cast<std::size_t>(a) * n + b) * n + k] = coords[k];
    }
  return make_lie_algebra(n, std::move(constants), g.name);
}

} // namespace

LieAlgebra random_nilpotent(std::mt19937_64& rng, int max_dim, int max_class) {
  if (max_dim < 1 || max_dim > 8) fail(ErrorKind::InvalidInput, "max_dim out of range");
  if (max_class < 1) fail(ErrorKind::InvalidInput, "max_class must be positive");

  int shape = static_cast<int>(rng() % 3);
  if (max_class == 1) shape = 0;
  if (max_class == 2 && shape == 2) shape = 1;

  LieAlgebra core;
  if (shape == 0) {
    // Abelian.
    int dim = 1 + static_cast<int>(rng() % max_dim);
    core = make_lie_algebra(dim, std::vector<Rational>(static_cast<std::size_t>(dim) * dim * dim),
                            "random.abelian");
  } else if (shape == 1) {
    // Two layers: [x_i, x_j] random in the center, class exactly <= 2.
    // Jacobi holds because all double brackets land in [center, -] = 0.
    int first = 2 + static_cast<int>(rng() % 2);           // 2..3
    int second = 1 + static_cast<int>(rng() % (max_dim - first >= 2 ? 2 : 1));
    int dim = std::min(first + second, max_dim);
    second = dim - first;
    if (second < 1) { first = dim - 1; second = 1; }
    std::vector<Rational> c(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
    auto at = [&](int i, int j, int k) -> Rational& {
      return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    };
    for (int i = 0; i < first; ++i)
      for (int j = i + 1; j < first; ++j)
        for (int k = first; k < dim; ++k) {
          long coeff = static_cast<long>(rng() % 5) - 2;
          at(i, j, k) = Rational(coeff);
          at(j, i, k) = Rational(-coeff);
        }
    core = make_lie_algebra(dim, std::move(c), "random.two-layer");
  } else {
    // Chain of class 3: [e1,e2] = e3, [e1,e3] = e4, [e2,e3] = s*e4;
    // e4 central. Every Jacobi triple lands on a central or repeated
    // element, so the parameter is free. Extra dimensions pad as an
    // abelian summand.
    int dim = std::min(4 + static_cast<int>(rng() % 2), max_dim);
    if (dim < 4) dim = 4;
    std::vector<Rational> c(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
    auto at = [&](int i, int j, int k) -> Rational& {
      return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    };
    auto set = [&](int i, int j, int k, long v) {
      at(i, j, k) = Rational(v);
      at(j, i, k) = Rational(-v);
    };
    set(0, 1, 2, 1);
    set(0, 2, 3, 1);
    set(1, 2, 3, static_cast<long>(rng() % 5) - 2);
    core = make_lie_algebra(dim, std::move(c), "random.chain");
  }

  LieAlgebra result = change_basis(core, random_unimodular(rng, core.dim));
  NilpotencyReport report = is_nilpotent(result);
  if (!report.nilpotent || report.nilpotency_class > max_class)
    fail(ErrorKind::Internal, "random algebra left the nilpotent family");
  return result;
}

} // namespace helly
