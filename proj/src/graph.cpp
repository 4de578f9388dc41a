#include "helly/graph.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace helly {

namespace {

void bfs_fill(const FiniteGraph& g, int source, std::vector<int>& out) {
  out.assign(g.n, -1);
  out[source] = 0;
  std::deque<int> frontier{source};
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop_front();
    for (int w : g.adj[v])
      if (out[w] < 0) {
        out[w] = out[v] + 1;
        frontier.push_back(w);
      }
  }
}

void compute_distances(FiniteGraph& g) {
  g.dist.resize(g.n);
  for (int v = 0; v < g.n; ++v) bfs_fill(g, v, g.dist[v]);
}

} // namespace

FiniteGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) fail(ErrorKind::InvalidInput, "graph needs at least one vertex");
  FiniteGraph g;
  g.n = n;
  g.adj.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrorKind::InvalidInput, "edge endpoint out of range");
    if (a == b) fail(ErrorKind::InvalidInput, "self loop");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) continue;
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  compute_distances(g);
  return g;
}

int diameter(const FiniteGraph& g) {
  int d = 0;
  for (const auto& row : g.dist)
    for (int v : row) d = std::max(d, v);
  return d;
}

FiniteGraph path_graph(int vertices) {
  if (vertices < 1) fail(ErrorKind::InvalidInput, "path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
  return make_graph(vertices, edges);
}

FiniteGraph cycle_graph(int vertices) {
  if (vertices < 3) fail(ErrorKind::InvalidInput, "cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i) edges.emplace_back(i, (i + 1) % vertices);
  return make_graph(vertices, edges);
}

FiniteGraph complete_graph(int vertices) {
  if (vertices < 1) fail(ErrorKind::InvalidInput, "complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
  return make_graph(vertices, edges);
}

FiniteGraph star_graph(int leaves) {
  if (leaves < 1) fail(ErrorKind::InvalidInput, "star needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return make_graph(leaves + 1, edges);
}

FiniteGraph hypercube_graph(int dims) {
  if (dims < 1 || dims > 16) fail(ErrorKind::InvalidInput, "hypercube dimension out of range");
  int n = 1 << dims;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dims; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return make_graph(n, edges);
}

FiniteGraph cayley_graph(const std::vector<std::vector<int>>& mult,
                         const std::vector<int>& generators) {
  int order = static_cast<int>(mult.size());
  if (order < 1) fail(ErrorKind::InvalidInput, "empty multiplication table");
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != order)
      fail(ErrorKind::InvalidInput, "multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= order) fail(ErrorKind::InvalidInput, "table entry out of range");
  }
  if (generators.empty()) fail(ErrorKind::InvalidInput, "no generators");

  // Identity and inverses, to enforce an inverse-closed generating set.
  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool id = true;
    for (int x = 0; x < order && id; ++x)
      if (mult[x][e] != x || mult[e][x] != x) id = false;
    if (id) { identity = e; break; }
  }
  if (identity < 0) fail(ErrorKind::InvalidInput, "table has no identity");

  std::set<int> gen_set(generators.begin(), generators.end());
  for (int gv : generators) {
    if (gv < 0 || gv >= order) fail(ErrorKind::InvalidInput, "generator out of range");
    if (gv == identity) fail(ErrorKind::InvalidInput, "identity is not a valid edge generator");
    int inv = -1;
    for (int x = 0; x < order; ++x)
      if (mult[gv][x] == identity) { inv = x; break; }
    if (inv < 0 || !gen_set.count(inv))
      fail(ErrorKind::InvalidInput, "generator set is not inverse-closed");
  }

  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < order; ++x)
    for (int gv : gen_set) edges.emplace_back(x, mult[x][gv]);
  FiniteGraph g = make_graph(order, edges);
  for (int x = 0; x < order; ++x) g.labels.push_back("e" + std::to_string(x));
  return g;
}

BallFamily canonical_family(const FiniteGraph& g, const std::vector<Ball>& balls) {
  std::map<int, int> radius_at;
  for (const auto& b : balls) {
    if (b.center < 0 || b.center >= g.n) fail(ErrorKind::InvalidInput, "ball center out of range");
    if (b.radius < 0) fail(ErrorKind::InvalidInput, "negative ball radius");
    auto [it, fresh] = radius_at.emplace(b.center, b.radius);
    if (!fresh) it->second = std::min(it->second, b.radius);
  }
  BallFamily family;
  for (auto [center, radius] : radius_at) family.balls.push_back(Ball{center, radius});
  return family;
}

bool balls_pairwise_intersect(const FiniteGraph& g, const BallFamily& family) {
  for (std::size_t i = 0; i < family.balls.size(); ++i)
    for (std::size_t k = i + 1; k < family.balls.size(); ++k) {
      int d = g.dist[family.balls[i].center][family.balls[k].center];
      if (d < 0 || d > family.balls[i].radius + family.balls[k].radius) return false;
    }
  return true;
}

std::optional<int> solve_ball_family(const FiniteGraph& g, const BallFamily& family) {
  if (family.balls.empty()) fail(ErrorKind::InvalidInput, "empty ball family");
  for (int v = 0; v < g.n; ++v) {
    bool inside = true;
    for (const auto& b : family.balls) {
      int d = g.dist[b.center][v];
      if (d < 0 || d > b.radius) { inside = false; break; }
    }
    if (inside) return v;
  }
  return std::nullopt;
}

namespace {

using Mask = std::uint32_t;

Mask ball_mask(const FiniteGraph& g, int center, int radius) {
  Mask m = 0;
  for (int v = 0; v < g.n; ++v) {
    int d = g.dist[center][v];
    if (d >= 0 && d <= radius) m |= Mask(1) << v;
  }
  return m;
}

struct HellySearch {
  const FiniteGraph* g;
  int diam;
  std::vector<std::vector<Mask>> masks; // masks[center][radius]
  std::vector<Ball> chosen;
  std::uint64_t nodes = 0;
  std::optional<BallFamily> counterexample;

  // Lexicographic DFS over (absent, radius 0..diam) per center.
  // Returns true when a counterexample has been found.
  bool run(int center, Mask intersection) {
    ++nodes;
    if (!chosen.empty() && intersection == 0) {
      counterexample = BallFamily{chosen};
      return true;
    }
    if (center == g->n) return false;
    if (run(center + 1, intersection)) return true; // absent first: lex order
    for (int r = 0; r <= diam; ++r) {
      bool compatible = true;
      for (const auto& b : chosen) {
        int d = g->dist[b.center][center];
        if (d < 0 || d > b.radius + r) { compatible = false; break; }
      }
      if (!compatible) continue; // no pairwise intersecting extension either
      chosen.push_back(Ball{center, r});
      if (run(center + 1, intersection & masks[center][r])) return true;
      chosen.pop_back();
    }
    return false;
  }
};

} // namespace

HellyVerdict is_helly(const FiniteGraph& g, int max_vertices) {
  if (g.n > max_vertices)
    fail(ErrorKind::BudgetExceeded,
         "graph has " + std::to_string(g.n) + " vertices, above cap " + std::to_string(max_vertices));
  if (g.n > 31) fail(ErrorKind::BudgetExceeded, "vertex masks support at most 31 vertices");

  HellySearch search;
  search.g = &g;
  search.diam = std::max(diameter(g), 0);
  search.masks.assign(g.n, {});
  for (int c = 0; c < g.n; ++c)
    for (int r = 0; r <= search.diam; ++r) search.masks[c].push_back(ball_mask(g, c, r));

  Mask all = g.n == 31 ? ~Mask(0) >> 1 : (Mask(1) << g.n) - 1;
  bool found = search.run(0, all);

  HellyVerdict verdict;
  verdict.helly = !found;
  verdict.counterexample = search.counterexample;
  verdict.nodes_examined = search.nodes;
  return verdict;
}

HellyVerdict is_helly_unpruned(const FiniteGraph& g, int max_vertices) {
  if (g.n > max_vertices)
    fail(ErrorKind::BudgetExceeded,
         "graph has " + std::to_string(g.n) + " vertices, above cap " + std::to_string(max_vertices));

  int diam = std::max(diameter(g), 0);
  std::vector<int> pick(g.n, -1); // -1 absent, otherwise the radius

  HellyVerdict verdict;
  verdict.helly = true;

  // Odometer over all radius assignments, least significant at the
  // last center so emission order is lexicographic in (center, pick).
  while (true) {
    ++verdict.nodes_examined;
    BallFamily family;
    for (int c = 0; c < g.n; ++c)
      if (pick[c] >= 0) family.balls.push_back(Ball{c, pick[c]});
    if (!family.balls.empty() && balls_pairwise_intersect(g, family) &&
        !solve_ball_family(g, family)) {
      verdict.helly = false;
      verdict.counterexample = family;
      return verdict;
    }
    int pos = g.n - 1;
    while (pos >= 0 && pick[pos] == diam) {
      pick[pos] = -1;
      --pos;
    }
    if (pos < 0) break;
    ++pick[pos];
  }
  return verdict;
}

GridBoxReport grid_box_helly(int n, int m, int max_vertices) {
  if (n < 1 || m < 1) fail(ErrorKind::InvalidInput, "grid box needs n >= 1, m >= 1");
  std::int64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= m + 1;
    if (count > max_vertices)
      fail(ErrorKind::BudgetExceeded, "grid box vertex count above cap");
  }

  int vertices = static_cast<int>(count);
  auto coords = [&](int v) {
    std::vector<int> x(n);
    for (int i = n - 1; i >= 0; --i) {
      x[i] = v % (m + 1);
      v /= m + 1;
    }
    return x;
  };

  std::vector<std::vector<int>> all_coords(vertices);
  for (int v = 0; v < vertices; ++v) all_coords[v] = coords(v);

  // Neighbors are the 3^n - 1 offset vectors with entries in {-1,0,1}.
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < vertices; ++v) {
    std::vector<int> offset(n, -1);
    while (true) {
      bool zero = true, valid = true;
      int w = 0;
      for (int i = 0; i < n; ++i) {
        int c = all_coords[v][i] + offset[i];
        if (offset[i] != 0) zero = false;
        if (c < 0 || c > m) { valid = false; break; }
        w = w * (m + 1) + c;
      }
      if (!zero && valid && v < w) edges.emplace_back(v, w);
      int i = n - 1;
      while (i >= 0 && offset[i] == 1) offset[i--] = -1;
      if (i < 0) break;
      ++offset[i];
    }
  }

  GridBoxReport report;
  report.n = n;
  report.m = m;
  report.graph = make_graph(vertices, edges);
  for (int v = 0; v < vertices; ++v) {
    std::string label;
    for (int i = 0; i < n; ++i) label += (i ? "," : "(") + std::to_string(all_coords[v][i]);
    report.graph.labels.push_back(label + ")");
  }

  report.distances_match = true;
  for (int v = 0; v < vertices; ++v)
    for (int w = v; w < vertices; ++w) {
      ++report.pairs_checked;
      int linf = 0;
      for (int i = 0; i < n; ++i) linf = std::max(linf, std::abs(all_coords[v][i] - all_coords[w][i]));
      if (report.graph.dist[v][w] != linf) report.distances_match = false;
    }
  // Distances agreeing with the max metric make every ball a
  // coordinate box; boxes over pairwise intersecting families share a
  // point per the interval intersection property applied per axis.
  return report;
}

void validate_scaled_instance(const ScaledHellyInstance& instance) {
  if (instance.centers.empty()) fail(ErrorKind::InvalidInput, "instance has no centers");
  if (instance.centers.size() != instance.radii.size())
    fail(ErrorKind::InvalidInput, "centers and radii differ in length");
  if (instance.d < 1 || instance.j < 1) fail(ErrorKind::InvalidInput, "d and j must be positive");
  for (int c : instance.centers)
    if (c < 0 || c >= instance.graph.n) fail(ErrorKind::InvalidInput, "center out of range");
  for (const auto& r : instance.radii)
    if (r < 0) fail(ErrorKind::InvalidInput, "negative radius");

  std::vector<std::int64_t> scaled = scaled_radii(instance);
  for (std::size_t i = 0; i < instance.centers.size(); ++i)
    for (std::size_t k = i + 1; k < instance.centers.size(); ++k) {
      int d = instance.graph.dist[instance.centers[i]][instance.centers[k]];
      if (d < 0 || d > scaled[i] + scaled[k])
        fail(ErrorKind::InvalidInput, "scaled balls are not pairwise intersecting");
    }
}

std::vector<std::int64_t> scaled_radii(const ScaledHellyInstance& instance) {
  std::vector<std::int64_t> out;
  Rational headroom = rat(1, 2 * static_cast<long>(instance.j));
  for (const auto& r : instance.radii) {
    Rational scaled = (r + headroom) * Rational(static_cast<long>(instance.d));
    out.push_back(to_int64(rat_ceil(scaled)));
  }
  return out;
}

ScaledHellyResult scaled_helly_check(const ScaledHellyInstance& instance) {
  validate_scaled_instance(instance);

  ScaledHellyResult result;
  result.radii_scaled = scaled_radii(instance);
  result.residual_bound = rat(1, 2 * static_cast<long>(instance.j)) +
                          rat(1, static_cast<long>(instance.d));

  // A radius at or above the diameter already covers the whole
  // component; clamping keeps int-sized radii for huge d.
  std::int64_t diam = diameter(instance.graph);
  std::vector<Ball> balls;
  for (std::size_t i = 0; i < instance.centers.size(); ++i)
    balls.push_back(Ball{instance.centers[i],
                         static_cast<int>(std::min<std::int64_t>(result.radii_scaled[i], diam))});
  BallFamily family = canonical_family(instance.graph, balls);

  auto solution = solve_ball_family(instance.graph, family);
  if (!solution) {
    result.solved = false;
    return result;
  }
  result.solved = true;
  result.solution = *solution;
  for (std::size_t i = 0; i < instance.centers.size(); ++i) {
    int d = instance.graph.dist[instance.centers[i]][result.solution];
    Rational residual = rat(d, static_cast<long>(instance.d)) - instance.radii[i];
    if (residual > result.residual_bound)
      fail(ErrorKind::Internal, "solution violates the residual bound");
    result.residuals.push_back(residual);
  }
  return result;
}

} // namespace helly
